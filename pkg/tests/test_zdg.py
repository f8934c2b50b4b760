from fractions import Fraction

import pytest

from boxlab import (
    InputError,
    augmenting_divisor,
    boolean_ring_graph,
    chromatic_number_exact,
    clique_number_exact,
    complete_graph,
    compressed_box_bound,
    compressed_zn,
    expand_compressed,
    factor,
    graph_of_intervals,
    is_box_one,
    is_interval_graph,
    make_graph,
    nilpotent_divisors,
    omega_chi_certificate,
    prime_power_rep,
    reduced_ring_box_bounds,
    verify_cover,
    zdg_zn,
    zn_join_cover,
    zn_report,
)

from oracles import net_graph


def test_factor_examples():
    f72 = factor(72)
    assert f72.even_part == ((3, 1),) and f72.odd_part == ((2, 1),)
    assert f72.a == 1 and f72.b == 1
    f12 = factor(12)
    assert f12.even_part == ((2, 1),) and f12.odd_part == ((3, 0),)
    f7 = factor(7)
    assert f7.is_prime and f7.even_part == () and f7.odd_part == ((7, 0),)
    with pytest.raises(InputError):
        factor(1)


def test_zdg_zn_12_frozen():
    g, labels = zdg_zn(12)
    assert labels == (2, 3, 4, 6, 8, 9, 10)
    named = sorted((labels[u], labels[v]) for u, v in g.edges)
    assert named == [(2, 6), (3, 4), (3, 8), (4, 6), (4, 9), (6, 8), (6, 10), (8, 9)]


def test_zdg_zn_9_and_prime():
    g, labels = zdg_zn(9)
    assert labels == (3, 6) and g == complete_graph(2)
    g, labels = zdg_zn(13)
    assert labels == () and g.n == 0


def test_compressed_12_frozen():
    c = compressed_zn(12)
    assert c.divisors == (2, 3, 4, 6)
    named = sorted((c.divisors[u], c.divisors[v]) for u, v in c.graph.edges)
    assert named == [(2, 6), (3, 4), (4, 6)]
    assert c.sizes == (2, 2, 2, 1)
    assert c.complete == (False, False, False, True)


def test_compressed_prime_square_and_8():
    c = compressed_zn(25)
    assert c.divisors == (5,) and c.sizes == (4,) and c.complete == (True,)
    c8 = compressed_zn(8)
    assert c8.divisors == (2, 4)
    assert c8.graph.sorted_edges() == [(0, 1)]
    assert c8.complete == (False, True)
    with pytest.raises(InputError):
        compressed_zn(7)


def test_expand_matches_direct():
    for n in (8, 9, 12, 16, 30, 36, 72, 100):
        g = expand_compressed(compressed_zn(n))
        assert g == zdg_zn(n)[0]


def test_class_sizes_sum_to_zero_divisor_count():
    for n in (12, 16, 45, 72, 90):
        c = compressed_zn(n)
        g, labels = zdg_zn(n)
        assert sum(c.sizes) == len(labels)


def test_expand_sweep_to_500():
    for n in range(4, 501):
        if factor(n).is_prime:
            continue
        assert expand_compressed(compressed_zn(n)) == zdg_zn(n)[0]


def test_nilpotent_divisors_examples():
    assert nilpotent_divisors(factor(72)) == (12, 24, 36)
    assert nilpotent_divisors(factor(12)) == (6,)
    assert nilpotent_divisors(factor(49)) == (7,)


def test_augmenting_divisor_examples():
    assert augmenting_divisor(factor(72), 1) == 18
    assert augmenting_divisor(factor(12), 1) == 4
    assert augmenting_divisor(factor(8), 1) == 2
    with pytest.raises(InputError):
        augmenting_divisor(factor(72), 2)


def test_omega_chi_certificate_72():
    value, clique, coloring = omega_chi_certificate(factor(72))
    assert value == 4
    assert clique == (12, 18, 24, 36)
    c = compressed_zn(72)
    assert coloring.is_proper(c.graph)
    assert coloring.num_colors == 4


def test_omega_chi_certificate_12_coloring_cases():
    value, clique, coloring = omega_chi_certificate(factor(12))
    assert value == 2
    assert clique == (4, 6)
    # divisors (2, 3, 4, 6): the class of 3 shares its color with 6, the
    # class of 2 with the augmenting divisor 4
    colors = coloring.colors
    assert colors[1] == colors[3]
    assert colors[0] == colors[2]


def test_omega_chi_two_primes():
    value, clique, _ = omega_chi_certificate(factor(15))
    assert value == 2 and clique == (3, 5)


def test_omega_chi_matches_exact_solvers():
    for n in (12, 16, 24, 36, 60, 72, 90, 128):
        value, _, _ = omega_chi_certificate(factor(n))
        c = compressed_zn(n)
        assert clique_number_exact(c.graph)[0] == value
        assert chromatic_number_exact(c.graph)[0] == value


def test_box_bound_examples():
    assert compressed_box_bound(factor(72)) == 7
    assert compressed_box_bound(factor(12)) == 3
    assert compressed_box_bound(factor(25)) == 0


def test_zn_join_cover_examples():
    cover = zn_join_cover(compressed_zn(12))
    assert cover.claimed_graph == zdg_zn(12)[0]
    assert len(cover) <= 3 and verify_cover(cover)[0]

    cover45 = zn_join_cover(compressed_zn(45))
    assert len(cover45) <= 3 and verify_cover(cover45)[0]

    cover8 = zn_join_cover(compressed_zn(8))
    assert len(cover8) == 1 and verify_cover(cover8)[0]


def test_zn_join_cover_rejects_single_complete_class():
    with pytest.raises(InputError):
        zn_join_cover(compressed_zn(9))


def test_is_box_one_examples():
    assert is_box_one(8)
    assert is_box_one(10)
    assert not is_box_one(12)
    with pytest.raises(InputError):
        is_box_one(11)


def test_is_box_one_twice_odd_prime_square():
    # 2p^2 graphs are interval: the complete class of 2p sits on [0, 1],
    # the class of p at points inside it, p^2 bridges to the class of 2
    for n in (18, 50, 98):
        assert is_box_one(n)
        assert is_interval_graph(zdg_zn(n)[0])[0]
    for n in (36, 54, 100):
        assert not is_box_one(n)
        assert not is_interval_graph(zdg_zn(n)[0])[0]


def test_prime_power_rep_2_cubed_frozen():
    rep = prime_power_rep(2, 3)
    # labels (2, 4, 6): the path 2 - 4 - 6
    assert rep.intervals[0] == (Fraction(1), Fraction(1))
    assert rep.intervals[1] == (Fraction(0), Fraction(1))
    assert rep.intervals[2] == (Fraction(1, 2), Fraction(1, 2))
    assert graph_of_intervals(rep) == zdg_zn(8)[0]


def test_prime_power_rep_small_cases():
    assert graph_of_intervals(prime_power_rep(3, 2)) == complete_graph(2)
    rep16 = prime_power_rep(2, 4)
    g16, labels = zdg_zn(16)
    assert graph_of_intervals(rep16) == g16
    # the lone top-layer element spans two units, the middle layer one
    assert rep16.intervals[labels.index(8)] == (Fraction(0), Fraction(2))
    assert rep16.intervals[labels.index(4)] == (Fraction(0), Fraction(1))
    for x in (2, 6, 10, 14):
        lo, hi = rep16.intervals[labels.index(x)]
        assert lo == hi and 1 < lo < 2


def test_prime_power_rep_sweep():
    for p, e in ((2, 5), (2, 6), (2, 7), (3, 3), (3, 4), (5, 3), (7, 2)):
        rep = prime_power_rep(p, e)
        assert graph_of_intervals(rep) == zdg_zn(p**e)[0]


def test_boolean_ring_graphs():
    b2 = boolean_ring_graph(2)
    assert b2.graph == complete_graph(2)
    assert b2.labels == ((1, 0), (0, 1))

    b3 = boolean_ring_graph(3)
    relabel = {m: i for i, m in enumerate([1, 2, 3, 4, 5, 6])}
    expected = make_graph(
        6,
        [
            (relabel[1], relabel[2]),
            (relabel[1], relabel[4]),
            (relabel[2], relabel[4]),
            (relabel[1], relabel[6]),
            (relabel[2], relabel[5]),
            (relabel[3], relabel[4]),
        ],
    )
    assert b3.graph == expected
    # isomorphic to the net: triangle of units with one pendant each
    assert clique_number_exact(b3.graph)[0] == clique_number_exact(net_graph())[0] == 3

    b4 = boolean_ring_graph(4)
    assert b4.graph.n == 14
    assert clique_number_exact(b4.graph)[0] == 4


def test_reduced_ring_bounds():
    for k, expected_upper in ((2, 2), (3, 6), (4, 14)):
        lower, upper, cover = reduced_ring_box_bounds(k)
        assert lower == k
        assert upper == expected_upper == 2**k - 2
        assert len(cover) == expected_upper
        assert verify_cover(cover)[0]


def test_zn_report_72():
    report = zn_report(72)
    assert report["omega_chi"] == 4
    assert report["box_upper"] == 7
    assert report["box_one"] is False
    assert report["S"] == [12, 24, 36]
    assert report["T"] == [12, 18, 24, 36]


def test_zn_report_prime_and_clamp():
    assert zn_report(13)["boxicity"] == 0
    r25 = zn_report(25)
    assert r25["box_upper"] == 1 and r25["box_upper_clamped"] is True
