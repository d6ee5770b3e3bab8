"""Structural checks and density bounds for maximal IC/NIC-plane drawings.

Every check returns PASS, FAIL or N/A together with a witness.  Bounds are
computed with :class:`fractions.Fraction` and exact ceilings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from icnic.drawing import (
    IC_PLANE,
    NIC_PLANE,
    ONE_PLANE,
    PLANE,
    Census,
    Drawing,
    DrawingClass,
    Face,
    census,
    classify,
    validate,
)

PASS, FAIL, NA = "PASS", "FAIL", "N/A"


@dataclass(frozen=True)
class CheckResult:
    status: str
    witness: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _pass():
    return CheckResult(PASS)


def _fail(witness: str):
    return CheckResult(FAIL, witness)


def _na(why: str = ""):
    return CheckResult(NA, why)


def _lines(checks: dict[str, CheckResult]) -> list[str]:
    out = []
    for name, r in checks.items():
        out.append(f"CHECK {name} {r.status}" + (f" {r.witness}" if r.witness else ""))
    return out


# -- bound functions ---------------------------------------------------------

_LOWER = {
    IC_PLANE: (Fraction(7, 3), Fraction(-14, 3)),
    NIC_PLANE: (Fraction(11, 5), Fraction(-18, 5)),
    PLANE: (Fraction(3), Fraction(-6)),
}
_UPPER = {
    PLANE: (Fraction(3), Fraction(-6)),
    IC_PLANE: (Fraction(13, 4), Fraction(-6)),
    NIC_PLANE: (Fraction(18, 5), Fraction(-36, 5)),
    ONE_PLANE: (Fraction(4), Fraction(-8)),
}


def lower_bound_value(n: int, k: DrawingClass) -> Fraction | None:
    """Exact rational lower bound on the edge count of a maximal drawing."""
    if k not in _LOWER:
        return None
    a, b = _LOWER[k]
    return a * n + b


def lower_bound(n: int, k: DrawingClass) -> int | None:
    """Minimum edge count of a maximal drawing of class ``k`` on ``n`` vertices
    (``None`` where no bound is asserted)."""
    v = lower_bound_value(n, k)
    return None if v is None else math.ceil(v)


def ic_lower_bound(n: int) -> int:
    return lower_bound(n, IC_PLANE)


def nic_lower_bound(n: int) -> int:
    return lower_bound(n, NIC_PLANE)


def upper_bound(n: int, k: DrawingClass) -> Fraction:
    a, b = _UPPER[k]
    return a * n + b


# -- crossing/face incidence ---------------------------------------------------


def crossing_face_incidence(d: Drawing, x: int) -> list[Face]:
    """Faces incident with crossing node ``x``: those whose walk passes
    through ``x`` and those whose boundary holds all four endpoints."""
    if x not in d.crossing_edges:
        raise ValueError(f"{x} is not a crossing node")
    quad = d.crossing_vertices(x)
    out = []
    for f in d.faces:
        if x in f.crossings or quad <= set(f.vertices):
            out.append(f)
    return out


def _incident_crossings(d: Drawing, f: Face) -> set[int]:
    got = set(f.crossings)
    verts = set(f.vertices)
    if len(verts) >= 4:
        got.update(x for x in d.crossing_edges if d.crossing_vertices(x) <= verts)
    return got


# -- structure -----------------------------------------------------------------


@dataclass
class StructureReport:
    cls: DrawingClass
    assume_maximal: bool
    checks: dict[str, CheckResult] = field(default_factory=dict)

    UNCONDITIONAL = ("handshake", "euler", "class_hierarchy")

    @property
    def failures(self) -> list[str]:
        names = self.checks if self.assume_maximal else self.UNCONDITIONAL
        return [k for k in names if self.checks[k].failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return _lines(self.checks)

    def __getattr__(self, name):
        checks = self.__dict__.get("checks", {})
        if name in checks:
            return checks[name]
        raise AttributeError(name)


_HIERARCHY = (PLANE, IC_PLANE, NIC_PLANE, ONE_PLANE)


def _check_adjacency(d: Drawing) -> CheckResult:
    for f in d.faces:
        vs = sorted(set(f.vertices))
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                if not d.has_edge(u, v):
                    return _fail(f"face={f.id} pair={u},{v}")
    return _pass()


def _check_vertex_range(d: Drawing) -> CheckResult:
    for f in d.faces:
        nv = len(set(f.vertices))
        if not 2 <= nv <= 4:
            return _fail(f"face={f.id} vertices={nv}")
        if nv == 2 and (f.is_true or f.size != 3):
            return _fail(f"face={f.id} two vertices but not a false 3-face")
        if nv == 4 and not (f.is_true and f.size == 4):
            return _fail(f"face={f.id} four vertices but not a true 4-face")
    return _pass()


def _check_clique(d: Drawing) -> CheckResult:
    for x in d.crossing_edges:
        q = sorted(d.crossing_vertices(x))
        for i, u in enumerate(q):
            for v in q[i + 1 :]:
                if not d.has_edge(u, v):
                    return _fail(f"crossing={x} pair={u},{v}")
    return _pass()


def _check_min_degree(d: Drawing) -> CheckResult:
    for v, deg in enumerate(d.degrees):
        if deg < 2:
            return _fail(f"vertex={v} degree={deg}")
    return _pass()


def _check_face_sizes(d: Drawing, k: DrawingClass) -> CheckResult:
    top = 4 if k in (IC_PLANE, PLANE) else 6
    for f in d.faces:
        if not 3 <= f.size <= top:
            return _fail(f"face={f.id} size={f.size}")
        if f.size >= 5 and f.is_true:
            return _fail(f"face={f.id} true {f.size}-face")
    return _pass()


def _check_incidence(d: Drawing) -> CheckResult:
    for f in d.faces:
        if 4 <= f.size <= 6:
            got = len(_incident_crossings(d, f))
            if got != f.size - 3:
                return _fail(f"face={f.id} size={f.size} crossings={got}")
    return _pass()


def _check_crossing_caps(d: Drawing) -> CheckResult:
    for x in d.crossing_edges:
        inc = crossing_face_incidence(d, x)
        true4 = sum(1 for f in inc if f.is_true and f.size == 4)
        big_false = sum(1 for f in inc if not f.is_true and f.size >= 4)
        if true4 > 1 or big_false > 4:
            return _fail(f"crossing={x} true4={true4} false_ge4={big_false}")
    return _pass()


def verify_structure(d: Drawing, assume_maximal: bool = False, cls: DrawingClass | None = None) -> StructureReport:
    """Evaluate every structural property.  Only handshake, Euler and the
    class hierarchy must hold for arbitrary drawings; the rest are
    consequences of maximality."""
    k = classify(d) if cls is None else cls
    rep = StructureReport(k, assume_maximal)
    ch = rep.checks

    deg_sum = sum(d.degrees)
    ch["handshake"] = _pass() if deg_sum == 2 * d.m else _fail(f"degree_sum={deg_sum} m={d.m}")
    chi = d.num_nodes - len(d.segments) + len(d.faces)
    ch["euler"] = _pass() if chi == 2 else _fail(f"V-E+F={chi}")
    start = _HIERARCHY.index(k)
    bad = [c.value for c in _HIERARCHY[start:] if not validate(d, c).ok]
    ch["class_hierarchy"] = _fail("not in " + ",".join(bad)) if bad else _pass()

    ch["face_vertices_adjacent"] = _check_adjacency(d)
    ch["crossing_clique"] = _check_clique(d)
    if k is ONE_PLANE:
        for name in ("face_vertex_count", "min_degree", "face_sizes",
                     "face_crossing_incidence", "crossing_face_caps"):
            ch[name] = _na("class 1p")
        return rep
    ch["face_vertex_count"] = _check_vertex_range(d)
    ch["min_degree"] = _check_min_degree(d)
    ch["face_sizes"] = _check_face_sizes(d, k)
    ch["face_crossing_incidence"] = _check_incidence(d)
    ch["crossing_face_caps"] = _check_crossing_caps(d)
    return rep


# -- bounds --------------------------------------------------------------------


@dataclass
class BoundReport:
    n: int
    m: int
    cls: DrawingClass
    maximal: bool
    lower_bound_required: int | None
    upper_bound_allowed: Fraction
    lower_ok: bool | None
    upper_ok: bool
    ic_crossings_ok: bool | None
    nic_crossings_ok: bool | None
    quad_fill_ok: bool | None
    triangulated_applicable: bool
    triangulated_ok: bool | None

    def checks(self) -> dict[str, CheckResult]:
        def st(flag, witness):
            if flag is None:
                return _na()
            return _pass() if flag else _fail(witness)

        return {
            "lower_bound": st(self.lower_ok, f"m={self.m} required={self.lower_bound_required}"),
            "upper_bound": st(self.upper_ok, f"m={self.m} allowed={self.upper_bound_allowed}"),
            "ic_crossing_count": st(self.ic_crossings_ok, "4c+h>n"),
            "nic_crossing_count": st(self.nic_crossings_ok, "6c+2h>m"),
            "quad_fill_edges": st(self.quad_fill_ok, "m<3n-6-4c"),
            "triangulated_edges": st(self.triangulated_ok, "m!=3n-6+c"),
        }

    @property
    def ok(self) -> bool:
        return not any(r.failed for r in self.checks().values())

    def lines(self) -> list[str]:
        return _lines(self.checks())


def verify_bounds(cen: Census, k: DrawingClass, maximal: bool) -> BoundReport:
    n, m, c, h = cen.n, cen.m, cen.c, cen.h
    sizes = set(cen.face_histogram)
    low = lower_bound(n, k)
    up = upper_bound(n, k)
    lower_ok = None if (not maximal or low is None) else m >= low
    ic_ok = (4 * c + h <= n) if (maximal and k is IC_PLANE) else None
    nic_ok = (6 * c + 2 * h <= m) if (maximal and k is NIC_PLANE) else None
    # the derivation only needs maximality and faces of size 3 or 4
    fill_ok = (m >= 3 * n - 6 - 4 * c) if (maximal and sizes <= {3, 4}) else None
    tri_app = sizes == {3}
    tri_ok = (m == 3 * n - 6 + c) if tri_app else None
    return BoundReport(n, m, k, maximal, low, up, lower_ok, m <= up, ic_ok, nic_ok, fill_ok, tri_app, tri_ok)


# -- C* -------------------------------------------------------------------------


@dataclass
class CStarReport:
    members: list[int]
    r_star: dict[int, int]

    @property
    def one_open_region_ok(self) -> bool:
        # informational: only a minimal counterexample is forced to satisfy it
        return all(r <= 1 for r in self.r_star.values())


def _around(d: Drawing, x: int) -> list[int]:
    """Darts leaving crossing node ``x``."""
    return list(d.rotation[x])


def detect_c_star(d: Drawing) -> CStarReport:
    """Crossings whose four surrounding faces are false 4-faces, and for each
    the number of triangular regions beyond those faces that are not faces."""
    members, r_star = [], {}
    for x in d.crossing_edges:
        out = _around(d, x)
        fids = [d.face_of[dt] for dt in out]
        fs = [d.faces[i] for i in fids]
        if len(set(fids)) != 4 or any(f.is_true or f.size != 4 for f in fs):
            continue
        members.append(x)
        r = 0
        for dt, f in zip(out, fs):
            r += 0 if _region_is_face(d, f, dt) else 1
        r_star[x] = r
    return CStarReport(members, r_star)


def _region_is_face(d: Drawing, f: Face, start: int) -> bool:
    i = f.darts.index(start)
    walk = f.darts[i:] + f.darts[:i]  # x->p, p->v, v->q, q->x
    pv, vq = walk[1], walk[2]
    if d.half_segment[pv >> 1] or d.half_segment[vq >> 1]:
        return False
    p, v, q = d.tails[pv], d.tails[vq], d.heads[vq]
    g = d.face_of[pv ^ 1]
    if g != d.face_of[vq ^ 1]:
        return False
    other = d.faces[g]
    return other.is_true and other.size == 3 and set(other.vertices) == {p, v, q}


def full_report(d: Drawing, cls: DrawingClass | None = None, maximal: bool = False):
    """Structure and bound checks together, in report order."""
    st = verify_structure(d, maximal, cls)
    bd = verify_bounds(census(d), st.cls, maximal)
    return st, bd
