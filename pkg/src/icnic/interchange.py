"""Line-oriented text format for drawings.

::

    DRAWING 1
    vertices <n>
    crossings <c>
    edge <id> <u> <v> [x <crossing-node>]
    seg <id> <tail> <head> <edge>
    rot <node> <dart> <dart> ...
    outer <face>

Sections appear in this order; ``outer`` is optional.
"""

from __future__ import annotations

from icnic.drawing import Drawing, Edge, Segment
from icnic.errors import FormatError

MAGIC = "DRAWING 1"


def _ints(tokens, lineno):
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None
    if any(v < 0 for v in vals):
        raise FormatError("negative integer", lineno)
    return vals


def loads(text: str) -> Drawing:
    """Parse interchange text; structural problems raise ``DrawingError``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise FormatError(f"first line must be {MAGIC!r}", 1)
    if len(lines) < 3:
        raise FormatError("missing header lines")

    def header(i, key):
        tok = lines[i].split(" ")
        if len(tok) != 2 or tok[0] != key:
            raise FormatError(f"expected '{key} <int>'", i + 1)
        return _ints(tok[1:], i + 1)[0]

    n = header(1, "vertices")
    c = header(2, "crossings")
    edges, segs = [], []
    rot: dict[int, list[int]] = {}
    outer_face = None
    stage = 0  # 0 edges, 1 segs, 2 rots, 3 outer
    order = {"edge": 0, "seg": 1, "rot": 2, "outer": 3}
    for i in range(3, len(lines)):
        lineno = i + 1
        tok = lines[i].split(" ")
        key = tok[0]
        if key not in order:
            raise FormatError(f"unknown directive {key!r}", lineno)
        if order[key] < stage or (key == "outer" and outer_face is not None):
            raise FormatError(f"directive {key!r} out of order", lineno)
        stage = order[key]
        vals = _ints(tok[1:], lineno) if key != "edge" else []
        if key == "edge":
            if len(tok) == 4:
                eid, u, v = _ints(tok[1:], lineno)
                x = None
            elif len(tok) == 6 and tok[4] == "x":
                eid, u, v = _ints(tok[1:4], lineno)
                x = _ints(tok[5:], lineno)[0]
            else:
                raise FormatError("expected 'edge <id> <u> <v> [x <node>]'", lineno)
            if eid != len(edges):
                raise FormatError(f"edge id {eid} out of sequence", lineno)
            edges.append(Edge(eid, u, v, x))
        elif key == "seg":
            if len(vals) != 4:
                raise FormatError("expected 'seg <id> <tail> <head> <edge>'", lineno)
            if vals[0] != len(segs):
                raise FormatError(f"segment id {vals[0]} out of sequence", lineno)
            segs.append(Segment(*vals))
        elif key == "rot":
            if not vals:
                raise FormatError("expected 'rot <node> <dart>...'", lineno)
            node = vals[0]
            if node in rot:
                raise FormatError(f"second rotation for node {node}", lineno)
            if node >= n + c:
                raise FormatError(f"node {node} out of range", lineno)
            rot[node] = vals[1:]
        else:
            if len(vals) != 1:
                raise FormatError("expected 'outer <face>'", lineno)
            outer_face = vals[0]
    missing = [v for v in range(n + c) if v not in rot]
    if missing:
        raise FormatError(f"no rot line for node {missing[0]}")
    d = Drawing(n, tuple(edges), tuple(segs), tuple(tuple(rot.get(v, ())) for v in range(n + c)))
    if outer_face is not None:
        if outer_face >= len(d.faces):
            raise FormatError(f"outer face {outer_face} does not exist")
        d = Drawing(d.n, d.edges, d.segments, d.rotation, d.faces[outer_face].darts[0])
    return d


def dumps(d: Drawing) -> str:
    out = [MAGIC, f"vertices {d.n}", f"crossings {d.c}"]
    for e in d.edges:
        tail = "" if e.crossing is None else f" x {e.crossing}"
        out.append(f"edge {e.id} {e.u} {e.v}{tail}")
    for s in d.segments:
        out.append(f"seg {s.id} {s.tail} {s.head} {s.edge}")
    for node, cyc in enumerate(d.rotation):
        out.append(" ".join(["rot", str(node), *map(str, cyc)]))
    if d.outer is not None:
        out.append(f"outer {d.outer_face}")
    return "\n".join(out) + "\n"


def load(path) -> Drawing:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(d: Drawing, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(d))


def build_drawing(text: str) -> Drawing:
    return loads(text)
