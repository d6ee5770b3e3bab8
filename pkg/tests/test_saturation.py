import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icnic import (
    IC_PLANE,
    NIC_PLANE,
    ONE_PLANE,
    PLANE,
    Insertion,
    SaturationPolicy,
    addable_edges,
    census,
    gen_base,
    gen_H,
    gen_H_prime,
    gen_M_prime,
    insert_edge,
    is_maximal,
    plane_k4,
    saturate,
    validate,
)
from icnic.constructions import cycle_drawing
from icnic.errors import InsertionError
from icnic.saturation import cross_route, format_log, zero_route
from icnic.search import random_skeleton

from oracles import addable_pairs

CLASSES = [PLANE, IC_PLANE, NIC_PLANE, ONE_PLANE]


def _pairs(d, k):
    return {(i.u, i.v) for i in addable_edges(d, k)}


def test_four_cycle_diagonals():
    c4 = cycle_drawing(4)
    ins = addable_edges(c4, IC_PLANE)
    assert all(i.is_zero for i in ins)
    assert sorted((i.u, i.v) for i in ins) == [(0, 2), (0, 2), (1, 3), (1, 3)]
    assert len({i.face_u for i in ins}) == 2


def test_chord_then_second_chord():
    c4 = cycle_drawing(4)
    d1 = insert_edge(c4, zero_route(c4, 0, 2, 0))
    assert (d1.m, len(d1.faces)) == (5, 3)
    outer = [f for f in range(len(d1.faces)) if {1, 3} <= set(d1.corners[f])]
    assert len(outer) == 1
    d2 = insert_edge(d1, zero_route(d1, 1, 3, outer[0]))
    assert census(d2).line() == "n=4 m=6 c=0 h=0 t=0"


def test_chord_then_crossing_gives_h1():
    c4 = cycle_drawing(4)
    d1 = insert_edge(c4, zero_route(c4, 0, 2, 0))
    d2 = insert_edge(d1, cross_route(d1, 1, 3, 4), IC_PLANE)
    cen = census(d2)
    assert (cen.n, cen.m, cen.c, cen.t) == (4, 6, 1, 4)
    assert cen.face_histogram == census(gen_base()).face_histogram


def test_complete_graphs_have_nothing_to_add():
    assert addable_edges(plane_k4(), IC_PLANE) == []
    assert is_maximal(plane_k4(), IC_PLANE)
    assert is_maximal(gen_base(), NIC_PLANE)


def test_h_prime_one_plane_vs_ic():
    hp = gen_H_prime(1)
    assert addable_edges(hp, ONE_PLANE)
    assert addable_edges(hp, IC_PLANE) == []
    assert addable_edges(hp, NIC_PLANE) == []


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_families_are_maximal(k):
    assert is_maximal(gen_H_prime(k), IC_PLANE)
    assert is_maximal(gen_M_prime(k), NIC_PLANE)


def test_saturate_leaves_maximal_drawings_alone():
    for d, k in ((plane_k4(), IC_PLANE), (gen_base(), IC_PLANE), (gen_H_prime(2), IC_PLANE)):
        out, log = saturate(d, k)
        assert log == [] and out == d


def test_saturate_four_cycle_ic():
    out, log = saturate(cycle_drawing(4), IC_PLANE)
    assert is_maximal(out, IC_PLANE)
    assert out.m >= 5 and len(log) == out.m - 4
    assert format_log(log).count("\n") == len(log)


def test_saturate_is_idempotent():
    for seed in range(5):
        d = random_skeleton(9, random.Random(seed))
        once, _ = saturate(d, NIC_PLANE, SaturationPolicy("random", seed))
        twice, log = saturate(once, NIC_PLANE)
        assert log == [] and twice == once


def test_saturate_rejects_out_of_class_input():
    with pytest.raises(InsertionError) as info:
        saturate(gen_base(), PLANE)
    assert info.value.code == "CLASS_VIOLATION"


def test_unknown_policy_order():
    with pytest.raises(ValueError):
        saturate(cycle_drawing(4), IC_PLANE, SaturationPolicy("greedy"))


@pytest.mark.parametrize(
    "ins",
    [
        Insertion(0, 1, 0, 0, 0, 1),                 # existing edge
        Insertion(0, 2, 0, 1, 0, 2),                 # faces disagree with darts
        Insertion(0, 2, 0, 0, 1, 2),                 # dart 1 does not leave 0
        Insertion(0, 2, 0, 0, 0, 99),                # no such dart
        Insertion(0, 0, 0, 0, 0, 0),                 # loop
        Insertion(0, 2, 0, 1, 0, 3, crossed=1, crossed_dart=2),  # crosses adjacent edge
    ],
)
def test_insert_edge_rejects_bad_routes(ins):
    with pytest.raises(InsertionError) as info:
        insert_edge(cycle_drawing(4), ins, ONE_PLANE)
    assert info.value.code == "INVALID_INSERTION"


def test_insert_edge_enforces_class():
    # M_2-like conflict: a second crossing that touches the first one's K4 twice
    hp = gen_H_prime(1)
    cand = [i for i in addable_edges(hp, ONE_PLANE) if not i.is_zero]
    assert cand
    with pytest.raises(InsertionError):
        insert_edge(hp, cand[0], IC_PLANE)


def test_no_crossing_in_plane_class():
    c4 = cycle_drawing(4)
    d1 = insert_edge(c4, zero_route(c4, 0, 2, 0))
    with pytest.raises(InsertionError):
        insert_edge(d1, cross_route(d1, 1, 3, 4), PLANE)


def test_every_candidate_inserts_cleanly():
    for d in (cycle_drawing(5), gen_H(2), random_skeleton(8, random.Random(3))):
        for k in (IC_PLANE, NIC_PLANE, ONE_PLANE):
            for ins in addable_edges(d, k):
                out = insert_edge(d, ins, k)
                assert out.m == d.m + 1
                assert validate(out, k).ok


# -- brute-force cross-check ------------------------------------------------------


def _small_drawings():
    yield cycle_drawing(4)
    yield cycle_drawing(5)
    yield gen_base()
    yield gen_H_prime(1)
    c4 = cycle_drawing(4)
    yield insert_edge(c4, zero_route(c4, 0, 2, 0))
    rng = random.Random(11)
    for n in (5, 6, 6, 7):
        d = random_skeleton(n, rng)
        yield d
        crossings = [i for i in addable_edges(d, ONE_PLANE) if not i.is_zero]
        if crossings:
            yield insert_edge(d, rng.choice(crossings), ONE_PLANE)


@pytest.mark.parametrize("k", [PLANE, IC_PLANE, NIC_PLANE, ONE_PLANE])
def test_addable_pairs_match_bruteforce(k):
    for d in _small_drawings():
        if len(d.segments) > 16 or not validate(d, k).ok:
            continue
        assert _pairs(d, k) == addable_pairs(d, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10_000), st.sampled_from([IC_PLANE, NIC_PLANE, ONE_PLANE]))
def test_random_partial_saturation_matches_bruteforce(n, seed, k):
    rng = random.Random(seed)
    d = random_skeleton(n, rng)
    for _ in range(rng.randint(0, 3)):
        cand = addable_edges(d, k)
        if not cand:
            break
        d = insert_edge(d, rng.choice(cand), k)
    if len(d.segments) <= 14:
        assert _pairs(d, k) == addable_pairs(d, k)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 12), st.integers(0, 10_000), st.sampled_from(CLASSES))
def test_saturation_result_is_maximal_and_in_class(n, seed, k):
    d = random_skeleton(n, random.Random(seed))
    out, log = saturate(d, k, SaturationPolicy("random", seed))
    assert validate(out, k).ok
    assert is_maximal(out, k)
    assert out.m == d.m + len(log)
    assert d.adjacency <= out.adjacency
