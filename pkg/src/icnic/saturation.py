"""Edge insertion and saturation.

An edge ``uv`` can be added to a drawing in two ways:

* zero-cross: ``u`` and ``v`` lie on a common face;
* one-cross: the new curve leaves ``u`` inside one face, crosses an
  uncrossed edge ``ab`` (with ``{u, v}`` and ``{a, b}`` disjoint) and ends at
  ``v`` in the face on the other side of ``ab``.  The new crossing must
  respect the class: for IC no endpoint may already belong to a crossing,
  for NIC each existing crossing may share at most one endpoint.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from icnic.drawing import (
    IC_PLANE,
    NIC_PLANE,
    ONE_PLANE,
    PLANE,
    Drawing,
    DrawingClass,
    Edge,
    Segment,
    validate,
)
from icnic.errors import InsertionError


@dataclass(frozen=True)
class Insertion:
    """A witnessed way to add the edge ``uv`` (``u < v``).

    ``dart_u``/``dart_v`` pick the corners: the new edge leaves ``u`` just
    before ``dart_u`` in the rotation, which is the corner of ``u`` on the
    face containing ``dart_u``.  For a one-cross route ``crossed_dart`` is the
    dart of the crossed edge lying on ``face_u``.
    """

    u: int
    v: int
    face_u: int
    face_v: int
    dart_u: int
    dart_v: int
    crossed: int | None = None
    crossed_dart: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.crossed is None

    def sort_key(self):
        return (
            self.u,
            self.v,
            0 if self.crossed is None else 1,
            self.face_u,
            -1 if self.crossed is None else self.crossed,
            self.face_v,
            self.dart_u,
            self.dart_v,
            -1 if self.crossed_dart is None else self.crossed_dart,
        )

    def log_line(self) -> str:
        if self.crossed is None:
            return f"add {self.u} {self.v} zero {self.face_u}"
        return f"add {self.u} {self.v} cross {self.crossed}"


def _class_allows(d: Drawing, k: DrawingClass, quad) -> bool:
    if k is ONE_PLANE:
        return True
    if k is PLANE:
        return False
    limit = 0 if k is IC_PLANE else 1
    vc = d.vertex_crossings
    hits = Counter(x for v in quad for x in vc[v])
    return all(cnt <= limit for cnt in hits.values())


def _bridge_route_ok(d: Drawing, crossed_dart: int, du: int, dv: int) -> bool:
    # Both sides of a bridge lie on one face walk W.  The new edge is two
    # chords of that face (u's corner to one side, the other side to v's
    # corner); they must not interleave along W.
    walk = d.faces[d.face_of[crossed_dart]].darts
    pos = {x: i for i, x in enumerate(walk)}
    base = pos[crossed_dart]
    L = len(walk)

    def rel(x):
        return (pos[x] - base) % L

    i, j, k = rel(du), rel(dv), rel(crossed_dart ^ 1)
    return (k < i) == (j < i)


def _candidates(d: Drawing, k: DrawingClass, all_slots: bool = False) -> list[Insertion]:
    faces = d.faces
    face_of = d.face_of
    tails = d.tails
    adj = d.adjacency
    out: list[Insertion] = []

    if all_slots:
        slots = []
        for f in faces:
            acc: dict[int, list[int]] = {}
            for dd in f.darts:
                t = tails[dd]
                if t < d.n:
                    acc.setdefault(t, []).append(dd)
            slots.append(acc)
    else:
        slots = [{v: [dd] for v, dd in cor.items()} for cor in d.corners]

    for f, acc in enumerate(slots):
        vs = sorted(acc)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if (u, v) in adj:
                    continue
                for du in acc[u]:
                    for dv in acc[v]:
                        out.append(Insertion(u, v, f, f, du, dv))

    for e in d.edges:
        if k is PLANE:
            break
        if e.crossing is not None:
            continue
        s = d.segment_of_edge(e.id)[0]
        fa, fb = face_of[2 * s], face_of[2 * s + 1]
        bridge = fa == fb
        sides = (2 * s, 2 * s + 1) if bridge else (2 * s,)
        for sd in sides:
            fu_all, fv_all = slots[face_of[sd]], slots[face_of[sd ^ 1]]
            for x, xds in fu_all.items():
                if x == e.u or x == e.v:
                    continue
                for y, yds in fv_all.items():
                    if y == e.u or y == e.v or y == x:
                        continue
                    if (min(x, y), max(x, y)) in adj:
                        continue
                    if not _class_allows(d, k, (x, y, e.u, e.v)):
                        continue
                    for dx in xds:
                        for dy in yds:
                            if bridge and not _bridge_route_ok(d, sd, dx, dy):
                                continue
                            if x < y:
                                ins = Insertion(x, y, face_of[sd], face_of[sd ^ 1], dx, dy, e.id, sd)
                            else:
                                ins = Insertion(y, x, face_of[sd ^ 1], face_of[sd], dy, dx, e.id, sd ^ 1)
                            out.append(ins)
    return sorted(set(out), key=Insertion.sort_key)


def _require_class(d: Drawing, k: DrawingClass) -> None:
    rep = validate(d, k)
    if not rep.ok:
        raise InsertionError("CLASS_VIOLATION", f"drawing is not {k.value}: {rep.violations[:3]}")


def addable_edges(d: Drawing, k: DrawingClass) -> list[Insertion]:
    """Every insertion keeping ``d`` in class ``k``.

    One insertion is reported per (pair, face) for zero-cross routes and per
    (pair, crossed edge, side) for one-cross routes, using the first corner
    of each endpoint on the canonical face walk.
    """
    _require_class(d, k)
    return _candidates(d, k)


def is_maximal(d: Drawing, k: DrawingClass) -> bool:
    _require_class(d, k)
    return not _candidates(d, k)


# ---------------------------------------------------------------------------
# Editing
# ---------------------------------------------------------------------------


def _insert_before(cyc: list[int], anchor: int, dart: int) -> None:
    cyc.insert(cyc.index(anchor), dart)


def check_insertion(d: Drawing, ins: Insertion, k: DrawingClass = ONE_PLANE) -> None:
    def bad(msg):
        raise InsertionError("INVALID_INSERTION", msg)

    u, v = ins.u, ins.v
    if not (0 <= u < d.n and 0 <= v < d.n) or u == v:
        bad(f"endpoints {u}, {v} are not two distinct vertices")
    if d.has_edge(u, v):
        bad(f"edge {u}-{v} already present")
    nd = d.num_darts
    for dd in (ins.dart_u, ins.dart_v):
        if not 0 <= dd < nd:
            bad(f"dart {dd} does not exist")
    if d.tails[ins.dart_u] != u or d.tails[ins.dart_v] != v:
        bad("corner darts must leave u and v")
    if d.face_of[ins.dart_u] != ins.face_u or d.face_of[ins.dart_v] != ins.face_v:
        bad("corner darts are not on the named faces")
    if ins.crossed is None:
        if ins.face_u != ins.face_v:
            bad("zero-cross route needs a single face")
        return
    if k is PLANE:
        bad("plane drawings admit no crossing")
    if not 0 <= ins.crossed < d.m:
        bad(f"edge {ins.crossed} does not exist")
    e = d.edges[ins.crossed]
    if e.crossing is not None:
        bad(f"edge {e.id} is already crossed")
    if {u, v} & {e.u, e.v}:
        bad("new edge would cross an adjacent edge")
    s = d.segment_of_edge(e.id)[0]
    cd = ins.crossed_dart
    if cd not in (2 * s, 2 * s + 1):
        bad("crossed_dart is not a dart of the crossed edge")
    if d.face_of[cd] != ins.face_u or d.face_of[cd ^ 1] != ins.face_v:
        bad("crossed edge does not separate face_u from face_v")
    if d.face_of[cd] == d.face_of[cd ^ 1] and not _bridge_route_ok(d, cd, ins.dart_u, ins.dart_v):
        bad("route around the bridge would self-cross")
    if not _class_allows(d, k, (u, v, e.u, e.v)):
        bad(f"new crossing violates {k.value}")


def insert_edge(
    d: Drawing, ins: Insertion, k: DrawingClass = ONE_PLANE, check: bool = True
) -> Drawing:
    """Apply an insertion; the result is a new drawing."""
    if check:
        check_insertion(d, ins, k)
    rot = [list(c) for c in d.rotation]
    edges = list(d.edges)
    segs = list(d.segments)
    eid = len(edges)
    u, v = ins.u, ins.v
    if ins.crossed is None:
        sid = len(segs)
        edges.append(Edge(eid, u, v))
        segs.append(Segment(sid, u, v, eid))
        _insert_before(rot[u], ins.dart_u, 2 * sid)
        _insert_before(rot[v], ins.dart_v, 2 * sid + 1)
        return Drawing(d.n, tuple(edges), tuple(segs), tuple(rot), d.outer)

    x = len(rot)
    old = d.edges[ins.crossed]
    s = d.segment_of_edge(old.id)[0]
    p, q = segs[s].tail, segs[s].head
    s2, su, sv = len(segs), len(segs) + 1, len(segs) + 2
    edges[old.id] = Edge(old.id, old.u, old.v, x)
    edges.append(Edge(eid, u, v, x))
    segs[s] = Segment(s, p, x, old.id)
    segs.append(Segment(s2, x, q, old.id))
    segs.append(Segment(su, u, x, eid))
    segs.append(Segment(sv, x, v, eid))
    rq = rot[q]
    rq[rq.index(2 * s + 1)] = 2 * s2 + 1
    to_p, to_q = 2 * s + 1, 2 * s2
    if ins.crossed_dart == 2 * s:  # u sees the edge running p -> q on its right
        rot.append([2 * su + 1, to_q, 2 * sv, to_p])
    else:
        rot.append([2 * su + 1, to_p, 2 * sv, to_q])
    _insert_before(rot[u], ins.dart_u, 2 * su)
    _insert_before(rot[v], ins.dart_v, 2 * sv + 1)
    return Drawing(d.n, tuple(edges), tuple(segs), tuple(rot), d.outer)


def add_vertex(d: Drawing, anchor: int) -> tuple[Drawing, int]:
    """Add a degree-1 vertex joined to the tail of ``anchor``, drawn in the
    face containing ``anchor``.  Crossing nodes are renumbered up by one."""
    n = d.n
    a = d.tails[anchor]
    w = n

    def sh(x):
        return x if x < n else x + 1

    edges = [Edge(e.id, e.u, e.v, None if e.crossing is None else e.crossing + 1) for e in d.edges]
    segs = [Segment(s.id, sh(s.tail), sh(s.head), s.edge) for s in d.segments]
    eid, sid = len(edges), len(segs)
    edges.append(Edge(eid, a, w))
    segs.append(Segment(sid, a, w, eid))
    rot = [list(c) for c in d.rotation]
    _insert_before(rot[a], anchor, 2 * sid)
    rot.insert(n, [2 * sid + 1])
    # a pendant on a 1-vertex drawing never happens (n >= 3)
    return Drawing(n + 1, tuple(edges), tuple(segs), tuple(rot), d.outer), w


def zero_route(d: Drawing, u: int, v: int, face: int) -> Insertion:
    """Zero-cross insertion of ``uv`` through ``face`` at first corners."""
    cor = d.corners[face]
    if u not in cor or v not in cor:
        raise InsertionError("INVALID_INSERTION", f"{u} and {v} do not share face {face}")
    if u > v:
        u, v = v, u
    return Insertion(u, v, face, face, cor[u], cor[v])


def cross_route(d: Drawing, u: int, v: int, edge: int) -> Insertion:
    """One-cross insertion of ``uv`` over ``edge`` at first corners.

    The side of the edge facing ``u`` is found from the faces; for an edge
    with ``u`` on both sides the lower dart wins.
    """
    s = d.segment_of_edge(edge)[0]
    for sd in (2 * s, 2 * s + 1):
        fu, fv = d.face_of[sd], d.face_of[sd ^ 1]
        cu, cv = d.corners[fu], d.corners[fv]
        if u in cu and v in cv:
            if u < v:
                return Insertion(u, v, fu, fv, cu[u], cv[v], edge, sd)
            return Insertion(v, u, fv, fu, cv[v], cu[u], edge, sd ^ 1)
    raise InsertionError("INVALID_INSERTION", f"edge {edge} does not separate {u} from {v}")


# ---------------------------------------------------------------------------
# Saturation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SaturationPolicy:
    """``order="lex"`` takes the smallest insertion by :meth:`Insertion.sort_key`;
    ``order="random"`` draws uniformly over every corner choice with a
    generator seeded by ``seed``."""

    order: str = "lex"
    seed: int = 0


DEFAULT_POLICY = SaturationPolicy()


def saturate(
    d: Drawing, k: DrawingClass, policy: SaturationPolicy = DEFAULT_POLICY
) -> tuple[Drawing, list[Insertion]]:
    _require_class(d, k)
    if policy.order not in ("lex", "random"):
        raise ValueError(f"unknown policy order {policy.order!r}")
    rng = random.Random(policy.seed)
    log: list[Insertion] = []
    while True:
        if policy.order == "lex":
            cands = _candidates(d, k)
            if not cands:
                break
            pick = cands[0]
        else:
            cands = _candidates(d, k, all_slots=True)
            if not cands:
                break
            pick = cands[rng.randrange(len(cands))]
        d = insert_edge(d, pick, k, check=False)
        log.append(pick)
    return d, log


def format_log(log: list[Insertion]) -> str:
    return "".join(ins.log_line() + "\n" for ins in log)
