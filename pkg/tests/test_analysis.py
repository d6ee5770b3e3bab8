import random
from fractions import Fraction

import pytest

from icnic import (
    IC_PLANE,
    NIC_PLANE,
    ONE_PLANE,
    PLANE,
    census,
    crossing_face_incidence,
    detect_c_star,
    gen_base,
    gen_H,
    gen_H_prime,
    gen_M_prime,
    insert_edge,
    lower_bound,
    octahedron,
    one_crossing_k5,
    plane_k4,
    upper_bound,
    verify_bounds,
    verify_structure,
)
from icnic.analysis import full_report, ic_lower_bound, lower_bound_value, nic_lower_bound
from icnic.constructions import cycle_drawing
from icnic.saturation import add_vertex, zero_route
from icnic.search import random_saturated


def test_lower_bound_fixed_points():
    assert ic_lower_bound(8) == 14
    assert nic_lower_bound(8) == 14
    assert ic_lower_bound(9) == 17
    assert lower_bound_value(8, IC_PLANE) == Fraction(14)
    assert lower_bound_value(9, IC_PLANE) == Fraction(49, 3)
    assert ic_lower_bound(4) == 5 and ic_lower_bound(5) == 7
    assert nic_lower_bound(6) == 10
    assert lower_bound(7, PLANE) == 15
    assert lower_bound(10, ONE_PLANE) is None


def test_upper_bounds():
    assert upper_bound(8, IC_PLANE) == 20
    assert upper_bound(10, NIC_PLANE) == Fraction(144, 5)
    assert upper_bound(10, ONE_PLANE) == 32
    assert upper_bound(10, PLANE) == 24


def test_incidence_of_single_crossing():
    d = gen_base()
    (x,) = d.crossing_edges
    kinds = sorted((f.size, f.is_true) for f in crossing_face_incidence(d, x))
    assert kinds == [(3, False)] * 4 + [(4, True)]
    d = gen_H_prime(1)
    (x,) = d.crossing_edges
    kinds = sorted((f.size, f.is_true) for f in crossing_face_incidence(d, x))
    assert kinds == [(4, False)] * 4 + [(4, True)]
    with pytest.raises(ValueError):
        crossing_face_incidence(d, 0)


@pytest.mark.parametrize(
    "d, k, top",
    [(gen_H_prime(3), IC_PLANE, 4), (gen_M_prime(2), NIC_PLANE, 6)],
)
def test_maximal_families_pass(d, k, top):
    st, bd = full_report(d, k, maximal=True)
    assert st.ok and not st.failures, st.lines()
    assert bd.ok, bd.lines()
    assert max(census(d).face_histogram) <= top
    assert all(line.split()[2] in ("PASS", "N/A") for line in st.lines() + bd.lines())


def test_cycle_fails_adjacency_with_witness():
    st = verify_structure(cycle_drawing(4), assume_maximal=True)
    assert st.face_vertices_adjacent.failed
    assert "pair=0,2" in st.face_vertices_adjacent.witness or "pair=1,3" in st.face_vertices_adjacent.witness
    # without maximality only the unconditional checks count
    assert verify_structure(cycle_drawing(4)).ok


def test_one_plane_skips_ic_nic_checks():
    st = verify_structure(gen_H_prime(1), assume_maximal=True, cls=ONE_PLANE)
    assert st.face_sizes.status == "N/A"
    assert st.face_vertices_adjacent.status == "PASS"


def test_class_hierarchy_check():
    st = verify_structure(gen_base(), cls=PLANE)
    assert st.class_hierarchy.failed and not st.ok


def test_bound_examples():
    bd = verify_bounds(census(gen_H_prime(1)), IC_PLANE, True)
    assert bd.lower_bound_required == 14 and bd.lower_ok and bd.m == 14
    bd = verify_bounds(census(one_crossing_k5()), ONE_PLANE, False)
    assert bd.triangulated_applicable and bd.triangulated_ok


def test_edge_identity_on_triangulations():
    for d in (plane_k4(), octahedron(), one_crossing_k5()):
        cen = census(d)
        assert set(cen.face_histogram) == {3}
        assert cen.m == 3 * cen.n - 6 + cen.c
    assert census(one_crossing_k5()).m == 10


def test_crossing_count_inequalities_on_families():
    for k in range(1, 6):
        c = census(gen_H_prime(k))
        assert 4 * c.c + c.h <= c.n
        c = census(gen_M_prime(k))
        assert 6 * c.c + 2 * c.h <= c.m


def test_c_star_examples():
    rep = detect_c_star(gen_H_prime(1))
    assert len(rep.members) == 1
    assert list(rep.r_star.values()) == [0]
    assert detect_c_star(gen_base()).members == []
    assert detect_c_star(gen_H(3)).members == []


def _split_hermit_triangle(d):
    # put a vertex inside one true 3-face next to the crossing and join it to all corners
    f = next(f for f in d.faces if f.is_true and f.size == 3 and min(d.degrees[v] for v in f.vertices) == 2)
    d, z = add_vertex(d, f.darts[0])
    for t in sorted(set(f.vertices)):
        if d.has_edge(z, t):
            continue
        face = next(g for g in range(len(d.faces)) if z in d.corners[g] and t in d.corners[g])
        d = insert_edge(d, zero_route(d, z, t, face))
    return d


def test_c_star_open_region():
    d = _split_hermit_triangle(gen_H_prime(1))
    rep = detect_c_star(d)
    assert len(rep.members) == 1
    assert list(rep.r_star.values()) == [1]
    assert rep.one_open_region_ok


def test_c_star_members_on_larger_families():
    rep = detect_c_star(gen_H_prime(3))
    assert len(rep.members) == 3
    assert all(0 <= r <= 4 for r in rep.r_star.values())


@pytest.mark.parametrize("k", [IC_PLANE, NIC_PLANE])
def test_random_maximal_pass(k):
    for seed in range(40):
        n = random.Random(seed).randint(8, 16)
        d = random_saturated(n, k, seed)
        st, bd = full_report(d, k, maximal=True)
        assert st.ok, (seed, st.lines())
        assert bd.ok, (seed, bd.lines())
