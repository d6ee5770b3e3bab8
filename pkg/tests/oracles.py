"""Brute-force reference implementations used to cross-check the library.

Nothing here calls the saturation module: new edges are spliced into the
rotation tuples by hand and the Drawing constructor (which rejects any
rotation system that is not spherical) decides whether the result is a
legal drawing.
"""

from __future__ import annotations

import itertools

from icnic.drawing import Drawing, DrawingClass, Edge, Segment, validate
from icnic.errors import DrawingError


def _try(d: Drawing, edges, segs, rot, k: DrawingClass) -> bool:
    try:
        nd = Drawing(d.n, tuple(edges), tuple(segs), tuple(tuple(r) for r in rot))
    except DrawingError:
        return False
    return validate(nd, k).ok


def _slots(cyc):
    # every position at which a new dart can enter the cyclic order
    return [list(cyc[:i]) + ["NEW"] + list(cyc[i:]) for i in range(max(1, len(cyc)))]


def _fill(cyc, dart):
    return [dart if x == "NEW" else x for x in cyc]


def zero_addable(d: Drawing, u: int, v: int, k: DrawingClass) -> bool:
    m, s = d.m, len(d.segments)
    edges = list(d.edges) + [Edge(m, u, v)]
    segs = list(d.segments) + [Segment(s, u, v, m)]
    for cu in _slots(d.rotation[u]):
        for cv in _slots(d.rotation[v]):
            rot = [list(r) for r in d.rotation]
            rot[u] = _fill(cu, 2 * s)
            rot[v] = _fill(cv, 2 * s + 1)
            if _try(d, edges, segs, rot, k):
                return True
    return False


def cross_addable(d: Drawing, u: int, v: int, k: DrawingClass) -> bool:
    m, s = d.m, len(d.segments)
    x = d.num_nodes  # new crossing node
    for e in d.edges:
        if e.crossing is not None or {e.u, e.v} & {u, v}:
            continue
        (sid,) = d.segment_of_edge(e.id)
        seg = d.segments[sid]
        a, b = seg.tail, seg.head
        edges = list(d.edges)
        edges[e.id] = Edge(e.id, e.u, e.v, x)
        edges.append(Edge(m, u, v, x))
        segs = list(d.segments)
        segs[sid] = Segment(sid, a, x, e.id)
        segs.append(Segment(s, x, b, e.id))      # darts 2s, 2s+1
        segs.append(Segment(s + 1, u, x, m))     # darts 2s+2, 2s+3
        segs.append(Segment(s + 2, x, v, m))     # darts 2s+4, 2s+5
        base = [list(r) for r in d.rotation] + [[]]
        base[b] = [2 * s + 1 if t == 2 * sid + 1 else t for t in base[b]]
        to_a, to_b, to_u, to_v = 2 * sid + 1, 2 * s, 2 * s + 3, 2 * s + 4
        for hub in ([to_a, to_u, to_b, to_v], [to_a, to_v, to_b, to_u]):
            for cu in _slots(d.rotation[u]):
                for cv in _slots(d.rotation[v]):
                    rot = [list(r) for r in base]
                    rot[u] = _fill(cu, 2 * s + 2)
                    rot[v] = _fill(cv, 2 * s + 5)
                    rot[x] = hub
                    if _try(d, edges, segs, rot, k):
                        return True
    return False


def addable_pairs(d: Drawing, k: DrawingClass) -> set[tuple[int, int]]:
    """Every non-adjacent pair that can be joined by some legal new curve."""
    out = set()
    for u, v in itertools.combinations(range(d.n), 2):
        if d.has_edge(u, v):
            continue
        if zero_addable(d, u, v, k) or cross_addable(d, u, v, k):
            out.add((u, v))
    return out


def is_maximal_bruteforce(d: Drawing, k: DrawingClass) -> bool:
    return not addable_pairs(d, k)
