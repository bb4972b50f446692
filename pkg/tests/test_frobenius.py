"""Point counting and Frobenius characteristic polynomials.

The brute_count oracle in conftest recounts points with its own field
arithmetic; the pinned polynomials at 13 and 17 were additionally verified
through an exact degree-6 Galois-group computation.
"""

import pytest

from gic.frobenius import (BadReductionError, HyperellipticCurve,
                           count_points, frobenius_charpoly, random_weil_poly,
                           validate_weil, weil_defects)

from .conftest import EXAMPLE_G, brute_count, newton_power_sums


def test_curve_validation():
    with pytest.raises(ValueError):
        HyperellipticCurve((1, 2, 3))              # even degree
    with pytest.raises(ValueError):
        HyperellipticCurve((0, 0, 0, 0))
    assert HyperellipticCurve((1, 1, 0, 1)).genus == 1


def test_good_reduction():
    curve = HyperellipticCurve(tuple(EXAMPLE_G))
    assert not curve.has_good_reduction(2)
    assert not curve.has_good_reduction(45427)     # disc = 45427^2
    for p in (3, 5, 7, 11, 13):
        assert curve.has_good_reduction(p)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_count_points_against_brute_oracle(p, example_curve):
    for k in (1, 2, 3):
        assert count_points(example_curve, p, k) == brute_count(EXAMPLE_G, p, k)


def test_count_points_small_genus_oracle():
    elliptic = HyperellipticCurve((1, 1, 0, 1))    # y^2 = x^3 + x + 1
    for p in (3, 5, 7, 13, 23):
        assert count_points(elliptic, p) == brute_count([1, 1, 0, 1], p, 1)
    genus2 = HyperellipticCurve((1, 1, 0, 0, 0, 1))    # y^2 = x^5 + x + 1
    for p in (5, 11, 13):                              # disc = 3 * 7^2 * 23
        for k in (1, 2):
            assert count_points(genus2, p, k) == \
                brute_count([1, 1, 0, 0, 0, 1], p, k)


def test_count_points_rejects_bad_prime(example_curve):
    with pytest.raises(BadReductionError):
        count_points(example_curve, 2)
    with pytest.raises(BadReductionError):
        frobenius_charpoly(example_curve, 45427)


# independently double-checked: |Gal| = 48 at 3, 5, 17 and 24 at 13
PINNED_CHARPOLYS = {
    3: ([27, 9, 6, 2, 2, 1, 1], [5, 13, 29]),
    5: ([125, 25, 5, 11, 1, 1, 1], [7, 27, 157]),
    13: ([2197, 169, 169, 67, 13, 1, 1], [15, 195, 2361]),
    17: ([4913, 289, -102, -88, -6, 1, 1], [19, 277, 4669]),
}


@pytest.mark.parametrize("p", sorted(PINNED_CHARPOLYS))
def test_frobenius_charpoly_pinned(p, example_curve):
    f, counts = frobenius_charpoly(example_curve, p)
    assert (f, counts) == PINNED_CHARPOLYS[p]
    assert validate_weil(f, p)


def test_charpoly_accepts_supplied_counts(example_curve):
    f, _ = frobenius_charpoly(example_curve, 3, counts=[5, 13, 29])
    assert f == PINNED_CHARPOLYS[3][0]


def test_charpoly_rejects_inconsistent_counts(example_curve):
    with pytest.raises(ValueError):
        frobenius_charpoly(example_curve, 3, counts=[5, 13, 30])
    with pytest.raises(ValueError):
        frobenius_charpoly(example_curve, 3, counts=[400, 13, 29])


def test_newton_roundtrip_through_supplied_counts(example_curve):
    """counts -> charpoly -> power sums -> counts is the identity, with the
    reference power sums coming straight from Newton's identities."""
    for seed in range(20):
        q = [3, 5, 7, 11, 19][seed % 5]
        f = random_weil_poly(3, q, seed=seed)
        sums = newton_power_sums(f, 3)
        counts = [q ** k + 1 - sums[k - 1] for k in (1, 2, 3)]
        rebuilt, _ = frobenius_charpoly(example_curve, q, counts=counts)
        assert rebuilt == f


def test_random_weil_polys_are_weil():
    for seed in range(30):
        q = [3, 5, 7, 11, 13][seed % 5]
        for g in (1, 2, 3):
            f = random_weil_poly(g, q, seed=seed)
            assert len(f) == 2 * g + 1 and f[-1] == 1
            assert validate_weil(f, q)


def test_weil_defects_reports_off_circle_roots():
    assert weil_defects([27, 9, 6, 2, 2, 1, 1], 3) == []
    assert weil_defects([1, 0, 1], 3)              # roots +-i, |.| != sqrt 3
