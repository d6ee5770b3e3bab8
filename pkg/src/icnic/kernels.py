"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  :func:`use_backend` switches explicitly (tests and the
benchmark exercise both).
"""

from __future__ import annotations

from icnic import _pykernels

try:
    from icnic import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

trace_faces = None
vertex_faces = None
enumerate_rotations = None
backend = None


def available() -> list[str]:
    return sorted(_BACKENDS)


def use_backend(name: str) -> None:
    global trace_faces, vertex_faces, enumerate_rotations, backend
    try:
        mod = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {available()}") from None
    trace_faces = mod.trace_faces
    vertex_faces = mod.vertex_faces
    enumerate_rotations = mod.enumerate_rotations
    backend = name


use_backend("compiled" if _ckernels is not None else "python")
