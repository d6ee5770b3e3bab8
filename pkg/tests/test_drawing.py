import pytest

from icnic import (
    IC_PLANE,
    NIC_PLANE,
    ONE_PLANE,
    PLANE,
    DrawingClass,
    build_drawing,
    census,
    classify,
    classify_face,
    faces,
    gen_base,
    gen_H,
    gen_H_prime,
    gen_M,
    one_crossing_k5,
    planarize,
    plane_k4,
    validate,
)
from icnic.constructions import cycle_drawing
from icnic.errors import DrawingError

H1_TEXT = """DRAWING 1
vertices 4
crossings 1
edge 0 0 1
edge 1 1 2
edge 2 2 3
edge 3 3 0
edge 4 0 2 x 4
edge 5 1 3 x 4
seg 0 0 1 0
seg 1 1 2 1
seg 2 2 3 2
seg 3 3 0 3
seg 4 0 4 4
seg 5 4 2 4
seg 6 1 4 5
seg 7 4 3 5
rot 0 0 7 8
rot 1 1 12 2
rot 2 3 11 4
rot 3 5 15 6
rot 4 9 14 10 13
"""

K4_TEXT = """DRAWING 1
vertices 4
crossings 0
edge 0 0 1
edge 1 1 2
edge 2 2 0
edge 3 0 3
edge 4 1 3
edge 5 2 3
seg 0 0 1 0
seg 1 1 2 1
seg 2 2 0 2
seg 3 0 3 3
seg 4 1 3 4
seg 5 2 3 5
rot 0 0 6 5
rot 1 2 8 1
rot 2 4 10 3
rot 3 7 9 11
"""


def _code(text):
    with pytest.raises(DrawingError) as info:
        build_drawing(text)
    return info.value.code


def test_plane_k4_from_text():
    d = build_drawing(K4_TEXT)
    assert (d.n, d.m, d.c) == (4, 6, 0)
    fs = faces(d)
    assert len(fs) == 4
    assert all(classify_face(d, f) == (3, 3, True) for f in fs)


def test_h1_from_text():
    d = build_drawing(H1_TEXT)
    assert (d.n, d.m, d.c) == (4, 6, 1)
    kinds = sorted(classify_face(d, f) for f in faces(d))
    assert kinds == [(3, 2, False)] * 4 + [(4, 4, True)]


def test_h_prime_1_faces():
    kinds = sorted((f.size, f.is_true) for f in faces(gen_H_prime(1)))
    assert kinds == [(3, True)] * 4 + [(4, False)] * 4 + [(4, True)]


def test_non_alternating_crossing():
    bad = H1_TEXT.replace("rot 4 9 14 10 13", "rot 4 9 10 14 13")
    assert _code(bad) == "NON_ALTERNATING_CROSSING"


def test_loop_and_duplicate_edges():
    assert _code(K4_TEXT.replace("edge 5 2 3", "edge 5 2 2")) == "LOOP_EDGE"
    assert _code(K4_TEXT.replace("edge 5 2 3", "edge 5 0 1")) == "DUPLICATE_EDGE"


def test_twin_mismatch():
    # dart 6 listed at the wrong node
    assert _code(K4_TEXT.replace("rot 0 0 6 5", "rot 0 0 5").replace("rot 3 7 9 11", "rot 3 7 9 11 6")) == "TWIN_MISMATCH"


def test_crossing_degree():
    text = H1_TEXT.replace("crossings 1", "crossings 2").replace("rot 4 9 14 10 13", "rot 4 9 14 10 13\nrot 5")
    assert _code(text) == "CROSSING_DEGREE"


def test_non_spherical():
    # swapping two darts at a degree-3 vertex of the plane K4 gives a torus embedding
    assert _code(K4_TEXT.replace("rot 0 0 6 5", "rot 0 0 5 6")) == "NON_SPHERICAL"


def test_disconnected():
    text = """DRAWING 1
vertices 4
crossings 0
edge 0 0 1
edge 1 2 3
seg 0 0 1 0
seg 1 2 3 1
rot 0 0
rot 1 1
rot 2 2
rot 3 3
"""
    assert _code(text) == "DISCONNECTED"


def test_too_small():
    text = "DRAWING 1\nvertices 2\ncrossings 0\nedge 0 0 1\nseg 0 0 1 0\nrot 0 0\nrot 1 1\n"
    assert _code(text) == "TOO_SMALL"


def test_validate_classes():
    h1 = gen_base()
    assert not validate(h1, PLANE).ok
    assert validate(h1, IC_PLANE).ok and validate(h1, NIC_PLANE).ok and validate(h1, ONE_PLANE).ok
    assert validate(gen_H(2), IC_PLANE).ok
    m2 = gen_M(2)
    assert validate(m2, NIC_PLANE).ok
    rep = validate(m2, IC_PLANE)
    assert not rep.ok and len(rep.violations) == 1


def test_classify_picks_smallest_class():
    assert classify(plane_k4()) is PLANE
    assert classify(gen_base()) is IC_PLANE
    assert classify(gen_M(2)) is NIC_PLANE


def test_class_parse():
    assert DrawingClass.parse("IC") is IC_PLANE
    assert DrawingClass.parse("1p") is ONE_PLANE
    with pytest.raises(ValueError):
        DrawingClass.parse("2p")


def test_census_examples():
    assert census(gen_H_prime(1)).line() == "n=8 m=14 c=1 h=4 t=0"
    for k in (1, 2, 3):
        cen = census(gen_H(k))
        assert (cen.n, cen.m, cen.t) == (4 * k, 10 * k - 4, 2 * k + 2)
        cen = census(gen_M(k))
        assert (cen.n, cen.m, cen.t) == (3 * k + 1, 7 * k - 1, 2 * k + 2)


def test_planarize_counts():
    pk = planarize(plane_k4())
    assert (pk.num_nodes, len(pk.edges), pk.num_faces) == (4, 6, 4)
    ph = planarize(gen_base())
    assert (ph.num_nodes, len(ph.edges), ph.num_faces) == (5, 8, 5)
    p5 = planarize(one_crossing_k5())
    assert (p5.num_nodes, len(p5.edges), p5.num_faces) == (6, 12, 8)
    for p in (pk, ph, p5):
        assert p.euler() == 2


def test_face_size_sum_is_twice_segments():
    for d in (cycle_drawing(5), gen_H(3), gen_M(3), gen_H_prime(2)):
        assert sum(f.size for f in faces(d)) == 2 * len(d.segments)


def test_outer_face_marker():
    d = gen_base()
    f = d.faces[d.outer_face]
    assert f.is_true and f.size == 4
