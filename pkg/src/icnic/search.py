"""Independent checks of the density bounds at desk scale.

``enumerate_maximal_small`` walks every labeled connected graph on ``n``
vertices, every admissible set of crossing pairs and every spherical
embedding of the resulting planarization, and keeps the drawings that the
saturation oracle calls maximal.  ``random_saturated`` samples maximal
drawings by saturating random starting drawings.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from icnic import kernels
from icnic.drawing import IC_PLANE, NIC_PLANE, ONE_PLANE, PLANE, Drawing, DrawingClass, Edge, Segment
from icnic.errors import BudgetExceeded, SpecError
from icnic.saturation import (
    SaturationPolicy,
    add_vertex,
    addable_edges,
    insert_edge,
    is_maximal,
    saturate,
    zero_route,
)

Pair = tuple[tuple[int, int], tuple[int, int]]

DEFAULT_BUDGET = 50_000_000


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CrossingSpec:
    """Unordered pairs of edges that are to cross each other."""

    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        norm = []
        for p in self.pairs:
            e, f = sorted((_edge(*p[0]), _edge(*p[1])))
            norm.append((e, f))
        object.__setattr__(self, "pairs", tuple(sorted(norm)))

    def __len__(self) -> int:
        return len(self.pairs)

    def check(self, g: nx.Graph, k: DrawingClass = ONE_PLANE) -> None:
        """Raise ``SpecError`` unless the pairs are usable in ``g`` under ``k``."""
        used = set()
        quads = []
        for e, f in self.pairs:
            for x in (e, f):
                if not g.has_edge(*x):
                    raise SpecError(f"{x} is not an edge")
                if x in used:
                    raise SpecError(f"edge {x} appears in two pairs")
                used.add(x)
            quad = set(e) | set(f)
            if len(quad) != 4:
                raise SpecError(f"crossing edges {e} and {f} share an endpoint")
            quads.append(quad)
        if k is PLANE and quads:
            raise SpecError("plane drawings have no crossings")
        cap = {IC_PLANE: 0, NIC_PLANE: 1}.get(k)
        if cap is not None:
            for q1, q2 in itertools.combinations(quads, 2):
                if len(q1 & q2) > cap:
                    raise SpecError(f"crossings on {sorted(q1)} and {sorted(q2)} share {len(q1 & q2)} vertices")


# -- planarization of a graph with designated crossings -----------------------


@dataclass
class _Plan:
    n: int
    edges: list[Edge]
    segments: list[Segment]  # prefix-connected order
    group: list[int]
    hub_of: dict[tuple[int, int], int]


def _plan(g: nx.Graph, cs: CrossingSpec) -> _Plan:
    n = g.number_of_nodes()
    hub_of = {}
    for i, (e, f) in enumerate(cs.pairs):
        hub_of[e] = hub_of[f] = n + i
    edges = [Edge(i, u, v, hub_of.get((u, v))) for i, (u, v) in enumerate(sorted(_edge(*e) for e in g.edges))]
    raw = []  # (tail, head, edge id, group at the hub end or -1)
    for e in edges:
        if e.crossing is None:
            raw.append((e.u, e.v, e.id, -1))
        else:
            x = e.crossing
            grp = cs.pairs[x - n].index((e.u, e.v))
            raw.append((e.u, x, e.id, grp))
            raw.append((x, e.v, e.id, grp))
    # order segments so that every prefix is connected
    nodes = n + len(cs)
    inc = [[] for _ in range(nodes)]
    for i, (p, q, _, _) in enumerate(raw):
        inc[p].append(i)
        inc[q].append(i)
    order, seen_seg, seen_node = [], set(), {0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for i in inc[v]:
                if i in seen_seg:
                    continue
                seen_seg.add(i)
                order.append(i)
                w = raw[i][0] if raw[i][1] == v else raw[i][1]
                if w not in seen_node:
                    seen_node.add(w)
                    nxt.append(w)
        frontier = nxt
    segs, group = [], []
    for sid, i in enumerate(order):
        p, q, eid, grp = raw[i]
        segs.append(Segment(sid, p, q, eid))
        group.append(grp if p >= n else -1)
        group.append(grp if q >= n else -1)
    return _Plan(n, edges, segs, group, hub_of)


def _drawing_from_succ(plan: _Plan, succ) -> Drawing:
    nodes = plan.n + len({e.crossing for e in plan.edges if e.crossing is not None})
    first = [-1] * nodes
    for s in plan.segments:
        for dt, t in ((2 * s.id, s.tail), (2 * s.id + 1, s.head)):
            if first[t] < 0:
                first[t] = dt
    rot = []
    for v in range(nodes):
        cyc = [first[v]]
        x = succ[first[v]]
        while x != first[v]:
            cyc.append(x)
            x = succ[x]
        rot.append(tuple(cyc))
    return Drawing(plan.n, tuple(plan.edges), tuple(plan.segments), tuple(rot))


def _gadget(g: nx.Graph, cs: CrossingSpec) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.nodes)
    crossed = {e for p in cs.pairs for e in p}
    h.add_edges_from(e for e in (_edge(*x) for x in g.edges) if e not in crossed)
    for i, ((a, b), (c, d)) in enumerate(cs.pairs):
        hub = ("hub", i)
        h.add_edges_from((hub, y) for y in (a, b, c, d))
        # subdivided rim a-c-b-d keeps the graph simple
        for j, (p, q) in enumerate(((a, c), (c, b), (b, d), (d, a))):
            r = ("rim", i, j)
            h.add_edge(p, r)
            h.add_edge(r, q)
    return h


def realizable(g: nx.Graph, cs: CrossingSpec, k: DrawingClass = ONE_PLANE) -> Drawing | None:
    """A drawing of ``g`` whose crossings are exactly the pairs of ``cs``, or
    ``None`` when no such drawing exists."""
    if sorted(g.nodes) != list(range(g.number_of_nodes())):
        raise SpecError("graph vertices must be 0..n-1")
    cs.check(g, k)
    if g.number_of_nodes() < 3 or not nx.is_connected(g):
        return None
    ok, emb = nx.check_planarity(_gadget(g, cs))
    if not ok:
        return None
    n = g.number_of_nodes()
    plan = _plan(g, cs)
    dart = {}
    for s in plan.segments:
        dart[(s.tail, s.head)] = 2 * s.id
        dart[(s.head, s.tail)] = 2 * s.id + 1

    def node_id(v):
        return v if isinstance(v, int) else n + v[1]

    succ = [-1] * (2 * len(plan.segments))
    for v in emb.nodes:
        if isinstance(v, tuple) and v[0] == "rim":
            continue
        me = node_id(v)
        cw = [node_id(w) for w in emb.neighbors_cw_order(v) if not (isinstance(w, tuple) and w[0] == "rim")]
        ccw = [dart[(me, w)] for w in reversed(cw)]
        for i, dt in enumerate(ccw):
            succ[dt] = ccw[(i + 1) % len(ccw)]
    return _drawing_from_succ(plan, succ)


# -- exhaustive enumeration ------------------------------------------------------


@dataclass
class EnumResult:
    n: int
    cls: DrawingClass
    c_max: int
    examined: int
    maximal: int
    min_edges: int | None
    witness: Drawing | None
    work: int = 0
    edge_counts: dict[int, int] | None = None

    def line(self) -> str:
        low = "none" if self.min_edges is None else self.min_edges
        return (f"RESULT n={self.n} class={self.cls.value} examined={self.examined} "
                f"maximal={self.maximal} min_edges={low}")


def _specs(g: nx.Graph, k: DrawingClass, c_max: int, prune: bool):
    yield CrossingSpec()
    if k is PLANE or c_max < 1:
        return
    es = sorted(_edge(*e) for e in g.edges)
    cand = []
    for e, f in itertools.combinations(es, 2):
        quad = set(e) | set(f)
        if len(quad) != 4:
            continue
        # a face through the crossing meets one end of each edge, so a
        # maximal drawing needs the whole quadruple pairwise adjacent
        if prune and any(not g.has_edge(p, q) for p, q in itertools.combinations(sorted(quad), 2)):
            continue
        cand.append((e, f))
    for r in range(1, c_max + 1):
        for combo in itertools.combinations(cand, r):
            cs = CrossingSpec(combo)
            try:
                cs.check(g, k)
            except SpecError:
                continue
            yield cs


def _faces_are_cliques(plan: _Plan, g: nx.Graph, succ) -> bool:
    n = plan.n
    tails = []
    for s in plan.segments:
        tails.append(s.tail)
        tails.append(s.head)
    _, walks = kernels.trace_faces(succ)
    for walk in walks:
        vs = sorted({tails[d] for d in walk if tails[d] < n})
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                if not g.has_edge(u, v):
                    return False
    return True


def _graph(n: int, mask: int, pairs) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
    return g


def _task(args):
    """Examine the graphs whose edge masks lie in ``[lo, hi)``."""
    n, k, c_max, lo, hi, budget, prune = args
    pairs = list(itertools.combinations(range(n), 2))
    examined = maximal = work = 0
    best = None  # (m, mask, spec index, embedding index, drawing)
    counts: dict[int, int] = {}
    for mask in range(lo, hi):
        g = _graph(n, mask, pairs)
        if not nx.is_connected(g):
            continue
        m = g.number_of_edges()
        for si, cs in enumerate(_specs(g, k, c_max, prune)):
            nodes = n + len(cs)
            if m + 2 * len(cs) > 3 * nodes - 6:
                continue  # planarization cannot be planar
            plan = _plan(g, cs)
            ends = [(s.tail, s.head) for s in plan.segments]
            left = budget - work if budget else 0
            if budget and left <= 0:
                raise BudgetExceeded(budget)
            embs, visited = kernels.enumerate_rotations(nodes, ends, plan.group, left)
            work += visited
            for ei, succ in enumerate(embs):
                pred = [0] * len(succ)
                for a, b in enumerate(succ):
                    pred[b] = a
                if pred < succ:  # the mirror image is counted instead
                    continue
                examined += 1
                if not _faces_are_cliques(plan, g, succ):
                    continue
                d = _drawing_from_succ(plan, succ)
                if not is_maximal(d, k):
                    continue
                maximal += 1
                counts[m] = counts.get(m, 0) + 1
                key = (m, mask, si, ei)
                if best is None or key < best[:4]:
                    best = (*key, d)
    return examined, maximal, work, best, counts


def enumerate_maximal_small(
    n: int,
    k: DrawingClass,
    c_max: int = 1,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
    workers: int = 1,
) -> EnumResult:
    """Exhaustively list the maximal drawings on ``n`` labeled vertices with
    at most ``c_max`` crossings; mirror images are counted once.

    ``budget`` caps the total number of embedding-search nodes (0 for no
    cap).  ``prune`` skips crossing pairs whose endpoints are not pairwise
    adjacent, which can never survive the maximality test.
    """
    if not 3 <= n <= 7:
        raise ValueError("enumeration supports 3 <= n <= 7")
    if not 0 <= c_max <= 2:
        raise ValueError("c_max must be 0, 1 or 2")
    total = 1 << (n * (n - 1) // 2)
    chunks = max(1, workers * 8)
    step = -(-total // chunks)
    tasks = [(n, k, c_max, lo, min(total, lo + step), budget, prune) for lo in range(0, total, step)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_task, tasks))
    else:
        parts = [_task(t) for t in tasks]
    examined = sum(p[0] for p in parts)
    maximal = sum(p[1] for p in parts)
    work = sum(p[2] for p in parts)
    if budget and work > budget:
        raise BudgetExceeded(budget)
    bests = [p[3] for p in parts if p[3] is not None]
    best = min(bests, key=lambda b: b[:4]) if bests else None
    counts: dict[int, int] = {}
    for p in parts:
        for m, cnt in p[4].items():
            counts[m] = counts.get(m, 0) + cnt
    return EnumResult(
        n, k, c_max, examined, maximal,
        None if best is None else best[0],
        None if best is None else best[4],
        work,
        dict(sorted(counts.items())),
    )


# -- random sampling ---------------------------------------------------------------


def _rng(n: int, k: DrawingClass, seed: int) -> random.Random:
    return random.Random(f"{n}/{k.value}/{seed}")


def random_skeleton(n: int, rng: random.Random) -> Drawing:
    """Connected plane drawing grown from a triangle: each new vertex lands in
    a random corner and is joined to up to two more vertices of that face."""
    from icnic.constructions import cycle_drawing

    d = cycle_drawing(3)
    while d.n < n:
        f = rng.randrange(len(d.faces))
        corner = rng.choice(sorted(d.corners[f].values()))
        d, w = add_vertex(d, corner)
        for _ in range(rng.randint(0, 2)):
            face = d.face_of[corner]
            if w not in d.corners[face]:
                break
            others = [v for v in d.corners[face] if v != w and not d.has_edge(v, w)]
            if not others:
                break
            d = insert_edge(d, zero_route(d, w, rng.choice(sorted(others)), face), PLANE)
    return d


def random_saturated(n: int, k: DrawingClass, seed: int) -> Drawing:
    """Maximal drawing of class ``k`` from a random skeleton, a few random
    crossings and a random saturation order; a pure function of its inputs."""
    if n < 3:
        raise ValueError("need n >= 3")
    rng = _rng(n, k, seed)
    d = random_skeleton(n, rng)
    if k is not PLANE:
        for _ in range(rng.randint(0, max(1, n // 3))):
            crossings = [ins for ins in addable_edges(d, k) if not ins.is_zero]
            if not crossings:
                break
            d = insert_edge(d, rng.choice(crossings), k)
    d, _ = saturate(d, k, SaturationPolicy("random", rng.randrange(1 << 30)))
    return d
