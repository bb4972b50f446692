"""Threshold-formula tests.

Every public function in gic.bounds is a smooth closed-form expression, so
the oracles are straightforward: re-evaluate the same formula with plain
``math.log`` floats and demand agreement to ~1e-12 relative, pin the exact
integer values, and check the documented structural identities (which term
dominates, how the GRH and unconditional variants relate, and that the
permutation-order bound really dominates a brute-force Landau maximum).
"""

import math
from functools import lru_cache

import pytest

from gic import chebotarev_B, main_bound, threefold_q
from gic.bounds import (
    WINCKLER_CONSTANT,
    alpha,
    collins_J,
    constant_group_threshold,
    delta_star,
    log_b,
    semistable_psl2_threshold,
    xi_bound,
)


def close(a, b, rel=1e-12):
    return math.isclose(float(a), float(b), rel_tol=rel)


# ------------------------------------------------------------------
# the basic isogeny bound
# ------------------------------------------------------------------

def test_alpha_values():
    assert alpha(1) == 1024
    assert alpha(3) == 27648
    assert alpha(6) == 221184
    with pytest.raises(ValueError):
        alpha(0)


def float_log_b(deg, g, h):
    hh = max(h, math.log(deg), 1.0)
    return 1024 * g ** 3 * (64 * g * g * math.log(14 * g)
                            + math.log(deg) + 2 * math.log(hh))


def test_log_b_matches_float_reference():
    assert close(log_b(1, 1, 1), 1024 * 64 * math.log(14))
    for deg, g, h in [(1, 1, 1), (6, 3, -2.511), (3, 6, -5.022),
                      (720, 3, 1.0), (52254720, 3, 0.5), (2, 4, 7.25)]:
        assert close(log_b(deg, g, h), float_log_b(deg, g, h))


def test_log_b_height_floor_and_monotonicity():
    # below the max(h, ln deg, 1) floor the height stops mattering
    assert log_b(1, 2, -10) == log_b(1, 2, 0.5) == log_b(1, 2, 1)
    assert log_b(1, 2, 3) > log_b(1, 2, 1)
    assert log_b(9, 2, 1) > log_b(4, 2, 1) > log_b(1, 2, 1)
    with pytest.raises(ValueError):
        log_b(0, 2, 1)


def test_log_b_precision_request_is_stable():
    a = log_b(6, 3, -2.511, precision_bits=128)
    b = log_b(6, 3, -2.511, precision_bits=512)
    assert close(a, b, rel=1e-30)


# ------------------------------------------------------------------
# the maximality threshold and its terms
# ------------------------------------------------------------------

def test_main_bound_example_threefold():
    out = main_bound(3, 1, -2.511, 3)
    terms = out["log_terms"]
    assert set(terms) == {"aux_place_term", "isogeny_term",
                          "square_isogeny_term"}
    assert out["dominant"] == "square_isogeny_term"
    assert out["log_bound"] == max(terms.values())
    assert 3.70e8 < float(out["log_bound"]) < 3.80e8
    assert close(out["log_bound"], 376377333.81042224, rel=1e-9)

    assert close(terms["aux_place_term"],
                 48 * (math.log(2)
                       + 4 * (math.sqrt(18) + 1) * math.log(3)))
    assert close(terms["isogeny_term"], float_log_b(6, 3, -2.511))
    assert close(terms["square_isogeny_term"],
                 float_log_b(3, 6, -5.022) / 6)


def test_main_bound_square_height_defaults_to_double():
    base = main_bound(3, 1, 1.25, 5)
    explicit = main_bound(3, 1, 1.25, 5, h_square=2.5)
    assert base["log_terms"] == explicit["log_terms"]
    bigger = main_bound(3, 1, 1.25, 5, h_square=9.0)
    assert (bigger["log_terms"]["square_isogeny_term"]
            > base["log_terms"]["square_isogeny_term"])
    # the other terms ignore h_square
    assert (bigger["log_terms"]["isogeny_term"]
            == base["log_terms"]["isogeny_term"])


def test_main_bound_drops_square_term_in_high_dimension():
    out = main_bound(19, 1, 1.0, 3)
    assert set(out["log_terms"]) == {"aux_place_term", "isogeny_term"}


def test_main_bound_needs_dimension_three():
    with pytest.raises(ValueError):
        main_bound(2, 1, 1.0, 3)


# ------------------------------------------------------------------
# the tensor-exclusion threshold for threefolds
# ------------------------------------------------------------------

def test_threefold_q_grh_matches_float_reference():
    out = threefold_q(1, -5.022, 0.0, 3.3, grh=True)
    assert out["mode"] == "grh"
    core = 8 * float_log_b(3, 6, -5.022) + 2 * math.log(3.3)
    assert close(out["log_q"], core, rel=1e-10)
    assert close(out["log_bound"], 48 * (math.log(2) + core), rel=1e-10)


def test_threefold_q_unconditional_stacks_one_more_log():
    grh = threefold_q(2, 1.5, 4.0, 9.0, grh=True)
    unc = threefold_q(2, 1.5, 4.0, 9.0, grh=False)
    assert unc["mode"] == "unconditional"
    assert close(unc["log_log_q"],
                 math.log(WINCKLER_CONSTANT) + float(grh["log_q"]))
    assert close(unc["log_log_bound"],
                 math.log(48) + float(unc["log_log_q"]))


def test_threefold_q_custom_chebotarev_constant():
    grh = threefold_q(1, 0.0, 2.0, 2.0, grh=True)
    unc = threefold_q(1, 0.0, 2.0, 2.0, grh=False, c=1)
    # ln(c=1) = 0: the log-log collapses onto the GRH core
    assert close(unc["log_log_q"], grh["log_q"], rel=1e-30)


def test_threefold_q_rejects_impossible_discriminant_data():
    with pytest.raises(ValueError):
        threefold_q(1, 1.0, 0.0, 0.5)
    threefold_q(1, 1.0, 0.0, 0.70)      # just above ln 2: accepted


# ------------------------------------------------------------------
# effective Chebotarev ingredients
# ------------------------------------------------------------------

def test_delta_star_pinned_and_formula():
    assert delta_star(1, [2, 3], 2, 1) == 24
    assert delta_star(1, [], 2, 1) == 4
    assert delta_star(5, [2, 3, 7], 3, 2) == 5 ** 3 * 3 ** 6 * 42 ** 4
    with pytest.raises(ValueError):
        delta_star(1, [2], 1, 1)
    with pytest.raises(ValueError):
        delta_star(0, [2], 2, 1)


def test_chebotarev_B_is_70_log_squared():
    value = chebotarev_B(1, [2, 3], 2, 1)
    assert close(value, 70 * math.log(24) ** 2)
    assert 707.0018 < float(value) < 707.0019
    assert close(chebotarev_B(81, [3, 5], 4, 3),
                 70 * math.log(delta_star(81, [3, 5], 4, 3)) ** 2)


def test_collins_J_pinned_and_crossover():
    assert collins_J(6) == 52254720 == 6 ** 4 * math.factorial(8)
    assert collins_J(70) == 70 ** 4 * math.factorial(72)
    assert collins_J(71) == math.factorial(72)
    assert collins_J(72) == math.factorial(73)
    assert collins_J(71) < collins_J(70)    # the Jordan slack drops away
    with pytest.raises(ValueError):
        collins_J(0)


# ------------------------------------------------------------------
# largest order of a permutation
# ------------------------------------------------------------------

@lru_cache(maxsize=None)
def max_lcm(n, cap):
    """Largest lcm of a partition of n into parts <= cap (brute force)."""
    if n == 0:
        return 1
    best = 1
    for part in range(1, min(n, cap) + 1):
        best = max(best, math.lcm(part, max_lcm(n - part, part)))
    return best


def test_xi_bound_dominates_brute_force_landau_from_four_on():
    for n in range(4, 61):
        assert float(xi_bound(n)) >= math.log(max_lcm(n, n)), n


def test_xi_bound_falls_short_at_exactly_three():
    # the closed form is famously *not* a bound at n = 3: it evaluates to
    # ln(2.967...), below the 3-cycle's order.  Pin the gap so nobody
    # "fixes" the domain check without noticing.
    assert max_lcm(3, 3) == 3
    assert math.isclose(float(xi_bound(3)), 1.0875623939625141, rel_tol=1e-12)
    assert float(xi_bound(3)) < math.log(3)


def test_xi_bound_formula_and_domain():
    n = 30
    ln_n = math.log(n)
    expected = math.sqrt(n * ln_n) * (1 + (math.log(ln_n) - 0.975)
                                      / (2 * ln_n))
    assert close(xi_bound(n), expected)
    with pytest.raises(ValueError):
        xi_bound(2)


# ------------------------------------------------------------------
# derived thresholds
# ------------------------------------------------------------------

def test_constant_group_threshold_is_scaled_isogeny_bound():
    value = constant_group_threshold(3, 1, 1.0)
    assert close(value, float(log_b(collins_J(6), 3, 1.0)) / 5)
    assert float(value) > 0


def test_semistable_psl2_threshold_values():
    assert semistable_psl2_threshold(1) == 1
    assert semistable_psl2_threshold(2) == 5
    assert semistable_psl2_threshold(3) == 13
    assert semistable_psl2_threshold(7) == 85
    with pytest.raises(ValueError):
        semistable_psl2_threshold(0)


def test_winckler_constant_pinned():
    assert WINCKLER_CONSTANT == 27175010
