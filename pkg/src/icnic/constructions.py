"""Extremal families and small named drawings.

``H_k`` grows from ``H_1`` (K4 with crossing diagonals) by gluing the
gadget ``H*`` into a false 3-face, identifying the gadget's base edge with
the face's only full edge.  ``H*`` adds four vertices spanning one crossed
K4 hung off the base edge; ``M*`` adds three vertices that, together with
the base edge's lower endpoint, span a crossed K4.  The primed families put
a hermit into every false 3-face.

All builders are deterministic: the host face is always the false 3-face
with the lowest id, the gadget's ``u`` is the host edge's lower endpoint,
and new vertices take the next free numbers.
"""

from __future__ import annotations

from icnic.drawing import IC_PLANE, NIC_PLANE, ONE_PLANE, Drawing, Edge, Face, Segment
from icnic.errors import InsertionError
from icnic.saturation import add_vertex, cross_route, insert_edge, zero_route

FAMILIES = ("hstar", "hk", "hprime", "mstar", "mk", "mprime")


def cycle_drawing(n: int) -> Drawing:
    """Plane cycle ``0-1-...-(n-1)-0``."""
    edges = [Edge(i, i, (i + 1) % n) for i in range(n)]
    segs = [Segment(i, i, (i + 1) % n, i) for i in range(n)]
    rot = [(2 * i, 2 * ((i - 1) % n) + 1) for i in range(n)]
    return Drawing(n, tuple(edges), tuple(segs), tuple(rot))


# -- small editing helpers (faces located by content, never by stale ids) --


def _face_with(d: Drawing, verts, skip: int | None = None) -> int:
    want = set(verts)
    hits = [f.id for f in d.faces if set(f.vertices) == want and f.id != skip]
    if len(hits) != 1:
        raise AssertionError(f"expected one face on {sorted(want)}, found {hits}")
    return hits[0]


def _first_face_with(d: Drawing, u: int, v: int) -> int:
    for f, cor in enumerate(d.corners):
        if u in cor and v in cor:
            return f
    raise AssertionError(f"{u} and {v} share no face")


def _pendant(d: Drawing, u: int, face: int) -> tuple[Drawing, int]:
    return add_vertex(d, d.corners[face][u])


def _join(d: Drawing, u: int, v: int, face: int, k=IC_PLANE) -> Drawing:
    return insert_edge(d, zero_route(d, u, v, face), k)


def _cross(d: Drawing, u: int, v: int, p: int, q: int, k) -> Drawing:
    e = next(e.id for e in d.edges if {e.u, e.v} == {p, q})
    return insert_edge(d, cross_route(d, u, v, e), k)


def _false_triangles(d: Drawing) -> list[Face]:
    return [f for f in d.faces if f.size == 3 and not f.is_true]


def _full_dart(d: Drawing, f: Face) -> int:
    full = [x for x in f.darts if not d.half_segment[x >> 1]]
    if len(full) != 1:
        raise InsertionError("NOT_FALSE_3_FACE", f"face {f.id} has {len(full)} full edges")
    return full[0]


# -- gadgets ---------------------------------------------------------------


def _grow_h(d: Drawing, u: int, v: int, h: int, a: int) -> Drawing:
    # (u, a, v) bounds the face of dart h; build b, c, d inside it
    d, b = _pendant(d, u, d.face_of[h])
    d = _join(d, b, v, d.face_of[h])
    d = _join(d, a, b, _face_with(d, (u, a, b, v)))
    d, x = _pendant(d, a, _face_with(d, (a, b, v)))
    d, c = _pendant(d, b, _face_with(d, (a, b, v, x)))
    d = _join(d, c, x, _face_with(d, (a, b, c, x, v)))
    d = _join(d, a, c, _face_with(d, (a, b, c, x, v)))
    return _cross(d, b, x, a, c, IC_PLANE)


def _grow_m(d: Drawing, u: int, v: int, h: int, s: int) -> Drawing:
    # (u, s, v) bounds the face of h; the gadget goes on the other side of us, sv
    g = _face_with(d, (u, s, v), skip=d.face_of[h])
    d, b = _pendant(d, u, g)
    d, c = _pendant(d, b, d.face_of[d.dart(b, u)])
    d = _join(d, c, s, d.face_of[d.dart(c, b)], NIC_PLANE)
    d = _join(d, u, c, _face_with(d, (u, b, c, s, v)), NIC_PLANE)
    return _cross(d, b, s, u, c, NIC_PLANE)


def _host(d: Drawing) -> tuple[int, int, int]:
    f = _false_triangles(d)[0]
    h = _full_dart(d, f)
    p, q = d.tails[h], d.heads[h]
    return min(p, q), max(p, q), h


def insert_h_star(d: Drawing) -> Drawing:
    u, v, h = _host(d)
    d, a = _pendant(d, u, d.face_of[h])
    d = _join(d, a, v, d.face_of[h])
    return _grow_h(d, u, v, h, a)


def insert_m_star(d: Drawing) -> Drawing:
    u, v, h = _host(d)
    d, s = _pendant(d, u, d.face_of[h])
    d = _join(d, s, v, d.face_of[h], NIC_PLANE)
    return _grow_m(d, u, v, h, s)


# -- public generators -------------------------------------------------------


def gen_base() -> Drawing:
    """K4 drawn as a 4-cycle with crossing diagonals; the 4-cycle bounds the
    distinguished outer face."""
    d = cycle_drawing(4)
    d = _join(d, 0, 2, 0)
    d = _cross(d, 1, 3, 0, 2, IC_PLANE)
    outer = next(f for f in d.faces if f.is_true)
    return Drawing(d.n, d.edges, d.segments, d.rotation, outer.darts[0])


def gen_h_star() -> Drawing:
    d = cycle_drawing(3)
    h = d.dart(0, 1)
    d = _grow_h(d, 0, 1, h, 2)
    return Drawing(d.n, d.edges, d.segments, d.rotation, d.dart(1, 0))


def gen_m_star() -> Drawing:
    d = cycle_drawing(3)
    h = d.dart(0, 1)
    d = _grow_m(d, 0, 1, h, 2)
    return Drawing(d.n, d.edges, d.segments, d.rotation, h)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def gen_H(k: int) -> Drawing:
    _check_k(k)
    d = gen_base()
    for _ in range(k - 1):
        d = insert_h_star(d)
    return d


def gen_M(k: int) -> Drawing:
    _check_k(k)
    d = gen_base()
    for _ in range(k - 1):
        d = insert_m_star(d)
    return d


def insert_hermit(d: Drawing, f: Face | int) -> Drawing:
    """Put a degree-2 vertex inside a false 3-face, joined to the two ends
    of its full edge."""
    if isinstance(f, int):
        f = d.faces[f]
    if f.size != 3 or f.is_true:
        raise InsertionError("NOT_FALSE_3_FACE", f"face {f.id} is a {'true' if f.is_true else 'false'} {f.size}-face")
    h = _full_dart(d, f)
    d, w = add_vertex(d, h)
    return _join(d, w, d.heads[h], d.face_of[h], k=ONE_PLANE)


def hermits_everywhere(d: Drawing) -> Drawing:
    while True:
        tri = _false_triangles(d)
        if not tri:
            return d
        d = insert_hermit(d, tri[0])


def gen_H_prime(k: int) -> Drawing:
    return hermits_everywhere(gen_H(k))


def gen_M_prime(k: int) -> Drawing:
    return hermits_everywhere(gen_M(k))


def generate(family: str, k: int = 1) -> Drawing:
    fam = family.lower()
    if fam == "hstar":
        return gen_h_star()
    if fam == "mstar":
        return gen_m_star()
    table = {"hk": gen_H, "hprime": gen_H_prime, "mk": gen_M, "mprime": gen_M_prime}
    if fam not in table:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return table[fam](k)


# -- named small drawings ------------------------------------------------------


def plane_k4() -> Drawing:
    d = cycle_drawing(3)
    d, w = _pendant(d, 0, 0)
    d = _join(d, w, 1, _first_face_with(d, w, 1))
    return _join(d, w, 2, _first_face_with(d, w, 2))


def octahedron() -> Drawing:
    d = cycle_drawing(4)
    for f in (0, None):
        if f is None:
            f = _face_with(d, (0, 1, 2, 3))
        d, w = _pendant(d, 0, f)
        for t in (1, 2, 3):
            d = _join(d, w, t, _first_face_with(d, w, t))
    return d


def one_crossing_k5() -> Drawing:
    """K5 with a single crossing: ``gen_base`` plus a vertex in the outer face."""
    d = gen_base()
    d, w = _pendant(d, 0, d.outer_face)
    for t in (1, 2, 3):
        d = _join(d, w, t, _first_face_with(d, w, t))
    return Drawing(d.n, d.edges, d.segments, d.rotation)
