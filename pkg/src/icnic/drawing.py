"""Drawings as rotation systems on their planarization.

A drawing on ``n`` original vertices with ``c`` crossings is stored as the
plane graph obtained by putting a degree-4 node at every crossing.  Nodes
``0..n-1`` are the original vertices and ``n..n+c-1`` the crossing nodes.
Every edge is either a single segment or, when crossed, two segments
meeting at its crossing node.  Segment ``s`` owns darts ``2s`` (tail to
head) and ``2s+1`` (head to tail); each node lists its outgoing darts in
cyclic (counterclockwise) order.  Faces are the orbits of
``d -> succ(twin(d))``.

Drawings are immutable and validated on construction.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from icnic import kernels
from icnic.errors import DrawingError


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    crossing: int | None = None


class Segment(NamedTuple):
    id: int
    tail: int
    head: int
    edge: int


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    size: int
    vertices: tuple[int, ...]
    crossings: tuple[int, ...]
    is_true: bool


class DrawingClass(enum.Enum):
    PLANE = "plane"
    ONE_PLANE = "1p"
    IC_PLANE = "ic"
    NIC_PLANE = "nic"

    @classmethod
    def parse(cls, text: str) -> "DrawingClass":
        for k in cls:
            if text.lower() in (k.value, k.name.lower()):
                return k
        raise ValueError(f"unknown drawing class {text!r}")


PLANE = DrawingClass.PLANE
ONE_PLANE = DrawingClass.ONE_PLANE
IC_PLANE = DrawingClass.IC_PLANE
NIC_PLANE = DrawingClass.NIC_PLANE


def _normalize(cyc):
    if not cyc:
        return ()
    i = cyc.index(min(cyc))
    return tuple(cyc[i:]) + tuple(cyc[:i])


@dataclass(frozen=True)
class Drawing:
    n: int
    edges: tuple[Edge, ...]
    segments: tuple[Segment, ...]
    rotation: tuple[tuple[int, ...], ...]
    outer: int | None = field(default=None, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        object.__setattr__(self, "segments", tuple(Segment(*s) for s in self.segments))
        object.__setattr__(self, "rotation", tuple(_normalize(list(r)) for r in self.rotation))
        _check(self)
        if self.outer is not None:
            # any dart of the face identifies it; keep the canonical one
            object.__setattr__(self, "outer", self.faces[self.face_of[self.outer]].darts[0])

    # -- sizes -----------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def c(self) -> int:
        return len(self.rotation) - self.n

    @property
    def num_nodes(self) -> int:
        return len(self.rotation)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.segments)

    def is_crossing(self, node: int) -> bool:
        return node >= self.n

    # -- dart arrays -----------------------------------------------------
    @cached_property
    def tails(self) -> list[int]:
        t = [0] * self.num_darts
        for s in self.segments:
            t[2 * s.id] = s.tail
            t[2 * s.id + 1] = s.head
        return t

    @cached_property
    def heads(self) -> list[int]:
        t = self.tails
        return [t[d ^ 1] for d in range(len(t))]

    @cached_property
    def succ(self) -> list[int]:
        nxt = [-1] * self.num_darts
        for cyc in self.rotation:
            k = len(cyc)
            for i, d in enumerate(cyc):
                nxt[d] = cyc[(i + 1) % k]
        return nxt

    @cached_property
    def _traced(self):
        return kernels.trace_faces(self.succ)

    @property
    def face_of(self) -> list[int]:
        return self._traced[0]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        _, walks = self._traced
        tails, n = self.tails, self.n
        half = self.half_segment
        out = []
        for i, walk in enumerate(walks):
            verts, seen, xs = [], set(), []
            for d in walk:
                t = tails[d]
                if t < n:
                    if t not in seen:
                        seen.add(t)
                        verts.append(t)
                elif t not in xs:
                    xs.append(t)
            is_true = not any(half[d >> 1] for d in walk)
            out.append(Face(i, tuple(walk), len(walk), tuple(verts), tuple(xs), is_true))
        return tuple(out)

    @cached_property
    def corners(self) -> list[dict[int, int]]:
        """Per face: original vertex -> first dart leaving it on the walk."""
        return kernels.vertex_faces(self._traced[1], self.tails, self.n)

    @cached_property
    def half_segment(self) -> list[bool]:
        n = self.n
        return [s.tail >= n or s.head >= n for s in self.segments]

    @property
    def outer_face(self) -> int | None:
        return None if self.outer is None else self.face_of[self.outer]

    # -- graph view ------------------------------------------------------
    @cached_property
    def adjacency(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(e.u, e.v), max(e.u, e.v)) for e in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.adjacency

    @cached_property
    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return deg

    @cached_property
    def crossing_edges(self) -> dict[int, tuple[int, int]]:
        """Crossing node -> the two edge ids meeting there."""
        acc: dict[int, list[int]] = {}
        for e in self.edges:
            if e.crossing is not None:
                acc.setdefault(e.crossing, []).append(e.id)
        return {x: (ids[0], ids[1]) for x, ids in sorted(acc.items())}

    def crossing_vertices(self, x: int) -> frozenset[int]:
        e1, e2 = self.crossing_edges[x]
        a, b = self.edges[e1], self.edges[e2]
        return frozenset((a.u, a.v, b.u, b.v))

    @cached_property
    def vertex_crossings(self) -> list[list[int]]:
        """Original vertex -> crossing nodes whose K4 contains it."""
        acc = [[] for _ in range(self.n)]
        for x in self.crossing_edges:
            for v in sorted(self.crossing_vertices(x)):
                acc[v].append(x)
        return acc

    def segment_of_edge(self, eid: int) -> list[int]:
        return self._edge_segments[eid]

    @cached_property
    def _edge_segments(self) -> list[list[int]]:
        acc = [[] for _ in self.edges]
        for s in self.segments:
            acc[s.edge].append(s.id)
        return acc

    def dart(self, p: int, q: int) -> int:
        """The dart from node ``p`` to node ``q``."""
        heads = self.heads
        for d in self.rotation[p]:
            if heads[d] == q:
                return d
        raise KeyError(f"no segment {p}-{q}")


def _check(d: Drawing) -> None:
    n, nodes = d.n, len(d.rotation)
    if n < 3:
        raise DrawingError("TOO_SMALL", f"need at least 3 vertices, got {n}")
    seen = set()
    for i, e in enumerate(d.edges):
        if e.id != i:
            raise DrawingError("BAD_SEGMENT", f"edge ids must run 0..m-1, got {e.id} at {i}")
        if not (0 <= e.u < n and 0 <= e.v < n):
            raise DrawingError("BAD_SEGMENT", f"edge {i} endpoint out of range")
        if e.u == e.v:
            raise DrawingError("LOOP_EDGE", f"edge {i} is a loop at {e.u}")
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            raise DrawingError("DUPLICATE_EDGE", f"edge {i} repeats {key}")
        seen.add(key)
        if e.crossing is not None and not (n <= e.crossing < nodes):
            raise DrawingError("BAD_SEGMENT", f"edge {i} names non-crossing node {e.crossing}")

    per_edge: list[list[Segment]] = [[] for _ in d.edges]
    for i, s in enumerate(d.segments):
        if s.id != i:
            raise DrawingError("BAD_SEGMENT", f"segment ids must run 0..s-1, got {s.id} at {i}")
        if not (0 <= s.tail < nodes and 0 <= s.head < nodes) or not 0 <= s.edge < len(d.edges):
            raise DrawingError("BAD_SEGMENT", f"segment {i} references out of range")
        if s.tail >= n and s.head >= n:
            raise DrawingError("BAD_SEGMENT", f"segment {i} joins two crossing nodes")
        per_edge[s.edge].append(s)
    for e, segs in zip(d.edges, per_edge):
        ends = sorted(Counter(x for s in segs for x in (s.tail, s.head)).items())
        if e.crossing is None:
            ok = len(segs) == 1 and {segs[0].tail, segs[0].head} == {e.u, e.v}
        else:
            ok = len(segs) == 2 and dict(ends) == {e.u: 1, e.v: 1, e.crossing: 2}
        if not ok:
            raise DrawingError("BAD_SEGMENT", f"segments of edge {e.id} do not match its record")

    tails = d.tails
    placed = [False] * d.num_darts
    for node, cyc in enumerate(d.rotation):
        for dd in cyc:
            if not 0 <= dd < d.num_darts:
                raise DrawingError("TWIN_MISMATCH", f"dart {dd} at node {node} does not exist")
            if placed[dd]:
                raise DrawingError("TWIN_MISMATCH", f"dart {dd} listed twice")
            if tails[dd] != node:
                raise DrawingError("TWIN_MISMATCH", f"dart {dd} listed at {node}, its tail is {tails[dd]}")
            placed[dd] = True
    if not all(placed):
        raise DrawingError("TWIN_MISMATCH", f"dart {placed.index(False)} missing from rotations")

    users: dict[int, list[int]] = {}
    for e in d.edges:
        if e.crossing is not None:
            users.setdefault(e.crossing, []).append(e.id)
    for x in range(n, nodes):
        cyc = d.rotation[x]
        if len(cyc) != 4:
            raise DrawingError("CROSSING_DEGREE", f"crossing node {x} has degree {len(cyc)}")
        es = users.get(x, [])
        if len(es) != 2:
            raise DrawingError("BAD_SEGMENT", f"crossing node {x} is used by {len(es)} edges")
        owner = [d.segments[dd >> 1].edge for dd in cyc]
        if owner[0] == owner[1] or owner[0] != owner[2] or owner[1] != owner[3]:
            raise DrawingError("NON_ALTERNATING_CROSSING", f"crossing node {x} rotation {owner}")
        a, b = d.edges[es[0]], d.edges[es[1]]
        if len({a.u, a.v, b.u, b.v}) != 4:
            raise DrawingError("ADJACENT_CROSSING", f"edges {a.id} and {b.id} share an endpoint")

    # connectivity of the planarization
    adj = [[] for _ in range(nodes)]
    for s in d.segments:
        adj[s.tail].append(s.head)
        adj[s.head].append(s.tail)
    reached = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in reached:
                reached.add(y)
                stack.append(y)
    if len(reached) != nodes:
        raise DrawingError("DISCONNECTED", f"{nodes - len(reached)} node(s) unreachable from node 0")

    nf = len(d._traced[1])
    if nodes - len(d.segments) + nf != 2:
        raise DrawingError(
            "NON_SPHERICAL",
            f"V-E+F = {nodes}-{len(d.segments)}+{nf} != 2",
        )
    if d.outer is not None and not 0 <= d.outer < d.num_darts:
        raise DrawingError("BAD_SEGMENT", f"outer dart {d.outer} out of range")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def faces(d: Drawing) -> list[Face]:
    return list(d.faces)


def classify_face(d: Drawing, f: Face | int) -> tuple[int, int, bool]:
    """``(size, vertex count, is_true)`` of a face."""
    if isinstance(f, int):
        f = d.faces[f]
    return f.size, len(f.vertices), f.is_true


@dataclass(frozen=True)
class ValidationReport:
    cls: DrawingClass
    violations: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(d: Drawing, k: DrawingClass) -> ValidationReport:
    """Check class membership.

    For PLANE every crossing node is a violation; for IC/NIC each offending
    pair of crossing nodes is listed once.
    """
    xs = list(d.crossing_edges)
    if k is PLANE:
        return ValidationReport(k, tuple((x,) for x in xs))
    if k is ONE_PLANE:
        return ValidationReport(k, ())
    limit = 0 if k is IC_PLANE else 1
    quads = {x: d.crossing_vertices(x) for x in xs}
    bad = []
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            if len(quads[x] & quads[y]) > limit:
                bad.append((x, y))
    return ValidationReport(k, tuple(bad))


def classify(d: Drawing) -> DrawingClass:
    """The smallest class the drawing belongs to."""
    for k in (PLANE, IC_PLANE, NIC_PLANE):
        if validate(d, k).ok:
            return k
    return ONE_PLANE


@dataclass(frozen=True)
class Census:
    n: int
    m: int
    c: int
    h: int
    t: int
    face_histogram: dict[int, tuple[int, int]]

    def line(self) -> str:
        return f"n={self.n} m={self.m} c={self.c} h={self.h} t={self.t}"


def census(d: Drawing) -> Census:
    hist: dict[int, list[int]] = {}
    for f in d.faces:
        slot = hist.setdefault(f.size, [0, 0])
        slot[0 if f.is_true else 1] += 1
    t = hist.get(3, [0, 0])[1]
    h = sum(1 for x in d.degrees if x == 2)
    return Census(d.n, d.m, d.c, h, t, {k: tuple(v) for k, v in sorted(hist.items())})


@dataclass(frozen=True)
class PlaneGraph:
    """Planarization: nodes ``0..num_nodes-1``, one edge per segment."""

    num_nodes: int
    n_original: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    num_faces: int

    def euler(self) -> int:
        return self.num_nodes - len(self.edges) + self.num_faces

    def to_dot(self, name: str = "planarization") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.num_nodes):
            if v < self.n_original:
                lines.append(f"  {v};")
            else:
                lines.append(f'  {v} [shape=point, label="x{v}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def planarize(d: Drawing) -> PlaneGraph:
    g = PlaneGraph(
        d.num_nodes,
        d.n,
        tuple((s.tail, s.head) for s in d.segments),
        d.rotation,
        len(d.faces),
    )
    assert len(g.edges) == d.m + 2 * d.c
    assert g.euler() == 2
    return g
