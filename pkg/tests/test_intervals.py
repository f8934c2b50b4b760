from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxlab import (
    InputError,
    complete_graph,
    cover_from_obj,
    cover_to_obj,
    cycle_graph,
    empty_graph,
    graph_of_intervals,
    make_cover,
    make_graph,
    make_rep,
    path_graph,
    rep_from_obj,
    rep_to_obj,
    verify_cover,
)
from boxlab.circular import block_window_rep


def test_graph_of_intervals_chain():
    rep = make_rep([(0, 1), (1, 2), (2, 3)])
    assert graph_of_intervals(rep) == path_graph(3)


def test_graph_of_intervals_disjoint():
    rep = make_rep([(0, 1), (2, 3)])
    assert graph_of_intervals(rep) == empty_graph(2)


def test_block_rep_realizes_expected_supergraph():
    # the (k, d) = (8, 3) block construction, against the explicit edge-set
    # description of the intended interval supergraph: all circular edges,
    # a complete block on vertices 3..5, a complete tail 6..7 joined to
    # everything before it
    rep = block_window_rep(8, 3)
    base = [(i, j) for i in range(8) for j in range(i + 1, 8) if 3 <= j - i <= 5]
    extra = [(3, 4), (3, 5), (4, 5), (6, 7)]
    cross = [(i, j) for i in range(6) for j in (6, 7)]
    expected = make_graph(8, base + extra + cross)
    assert graph_of_intervals(rep) == expected


def test_make_rep_validation():
    with pytest.raises(InputError):
        make_rep([(1, 0)])
    with pytest.raises(InputError):
        make_rep({0: (0, 1), 2: (0, 1)})


def _rep_c4_plus_chord(chord02: bool):
    # interval representation of a 4-cycle plus one chord
    if chord02:
        return make_rep({0: (0, 2), 1: (0, 0), 2: (0, 2), 3: (2, 2)})
    return make_rep({1: (0, 2), 2: (0, 0), 3: (0, 2), 0: (2, 2)})


def test_verify_cover_happy_path():
    c4 = cycle_graph(4)
    cover = make_cover(c4, (_rep_c4_plus_chord(True), _rep_c4_plus_chord(False)))
    ok, problems = verify_cover(cover)
    assert ok and not problems


def test_verify_cover_single_rep():
    p4 = path_graph(4)
    rep = make_rep([(0, 1), (1, 2), (2, 3), (3, 4)])
    assert graph_of_intervals(rep) == p4
    ok, _ = verify_cover(make_cover(p4, (rep,)))
    assert ok


def test_verify_cover_detects_overcover():
    c4 = cycle_graph(4)
    k4_rep = make_rep([(0, 1)] * 4)
    ok, problems = verify_cover(make_cover(c4, (k4_rep,)))
    assert not ok
    kinds = {p.kind for p in problems}
    assert kinds == {"uncovered-non-edge"}
    assert (0, 2) in {p.pair for p in problems}


def test_verify_cover_detects_missing_edge():
    c4 = cycle_graph(4)
    bad = make_rep([(0, 0), (2, 2), (4, 4), (6, 6)])
    ok, problems = verify_cover(make_cover(c4, (bad,)))
    assert not ok
    assert any(p.kind == "missing-edge" and p.rep_index == 0 for p in problems)


def test_verify_cover_size_mismatch_is_reported_not_raised():
    c4 = cycle_graph(4)
    small = make_rep([(0, 1)] * 3)
    ok, problems = verify_cover(make_cover(c4, (small,)))
    assert not ok
    assert any(p.kind == "size-mismatch" for p in problems)


def test_empty_cover_rejected():
    with pytest.raises(InputError):
        make_cover(complete_graph(2), ())


rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=16
)


@st.composite
def reps(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    intervals = []
    for _ in range(n):
        a = draw(rationals)
        b = draw(rationals)
        intervals.append((min(a, b), max(a, b)))
    return make_rep(intervals)


@given(reps())
@settings(max_examples=120)
def test_rep_serialization_round_trip(rep):
    assert rep_from_obj(rep_to_obj(rep)) == rep


@given(reps(), reps())
@settings(max_examples=60)
def test_cover_serialization_round_trip(r1, r2):
    if r1.n != r2.n:
        return
    cover = make_cover(graph_of_intervals(r1), (r1, r2))
    assert cover_from_obj(cover_to_obj(cover)) == cover


@given(reps())
@settings(max_examples=120)
def test_realized_graph_matches_pairwise_definition(rep):
    g = graph_of_intervals(rep)
    for u in range(rep.n):
        lo_u, hi_u = rep.intervals[u]
        for v in range(u + 1, rep.n):
            lo_v, hi_v = rep.intervals[v]
            meets = max(lo_u, lo_v) <= min(hi_u, hi_v)
            assert g.has_edge(u, v) == meets
