"""Explicit numeric thresholds for maximality of mod-l Galois images.

Every bound here is astronomically large, so the API trades in natural
logarithms (and once in log-log): a return value ``log_bound = L`` means
"the statement holds for every prime l with ln l > L".  All floating
arithmetic is gmpy2.mpfr at a caller-selectable precision (default 128
bits), which is overkill for formulas this smooth but costs nothing.

The basic quantity is an isogeny-theoretic height bound depending on a
field degree, a dimension, and a (Faltings-style) height; everything else
is combinations of it with completely explicit constants.  Heights are
opaque real inputs: callers supply whatever stable-height value they
trust, and the product rule "square the abelian variety = double the
height" is applied by the callers, not here.
"""

from math import factorial

import gmpy2
from gmpy2 import mpfr

__all__ = [
    "alpha", "log_b", "main_bound", "threefold_q", "delta_star",
    "chebotarev_B", "collins_J", "xi_bound", "constant_group_threshold",
    "semistable_psl2_threshold", "WINCKLER_CONSTANT",
]

WINCKLER_CONSTANT = 27175010     # effective Chebotarev, unconditional form

_DEFAULT_PRECISION = 128


def _ctx(precision_bits):
    return gmpy2.context(precision=precision_bits)


def alpha(g):
    """Exponent 2**10 * g**3 controlling the height bound."""
    if g < 1:
        raise ValueError("dimension must be positive")
    return 1024 * g ** 3


def log_b(deg, g, h, precision_bits=_DEFAULT_PRECISION):
    """ln of the isogeny bound  ((14g)**(64 g^2) * deg * max(h, ln deg, 1)**2)**alpha(g)

    for an abelian variety of dimension g and height h over a field whose
    absolute degree (including any auxiliary extension factor) is ``deg``.

    Examples
    ========

    >>> float(log_b(1, 1, 1)) == 1024 * 64 * float(gmpy2.log(14))
    True
    """
    if deg < 1:
        raise ValueError("field degree must be >= 1")
    with _ctx(precision_bits):
        ln_deg = gmpy2.log(mpfr(deg))
        hh = max(mpfr(h), ln_deg, mpfr(1))
        return alpha(g) * (64 * g * g * gmpy2.log(mpfr(14 * g))
                           + ln_deg + 2 * gmpy2.log(hh))


def main_bound(g, deg_K, h, q_v, h_square=None,
               precision_bits=_DEFAULT_PRECISION):
    """ln of the maximality threshold for dimension g >= 3, split into its
    competing terms.

    Above the returned bound (and away from ramified primes), a Frobenius
    at an auxiliary place with residue field size q_v whose characteristic
    polynomial has the full signed permutation group forces the mod-l
    image to be all of GSp_{2g}.  ``h_square`` is the height of the square
    of the variety and defaults to 2*h.

    Returns a dict with the individual log-terms, the overall ``log_bound``
    (their max), and which term dominates.  For g >= 19 the square-variety
    term is not needed and is omitted.
    """
    if g < 3:
        raise ValueError("needs dimension >= 3")
    if h_square is None:
        h_square = 2 * h
    with _ctx(precision_bits):
        terms = {}
        terms["aux_place_term"] = (
            2 ** g * factorial(g)
            * (gmpy2.log(mpfr(2))
               + 4 * (gmpy2.sqrt(mpfr(6 * g)) + 1) * gmpy2.log(mpfr(q_v))))
        terms["isogeny_term"] = log_b(factorial(g) * deg_K, g, h,
                                      precision_bits)
        if g < 19:
            terms["square_isogeny_term"] = (
                log_b(g * deg_K, 2 * g, h_square, precision_bits) / (2 * g))
        log_bound = max(terms.values())
        dominant = max(terms, key=lambda k: terms[k])
        return {"log_terms": terms, "log_bound": log_bound,
                "dominant": dominant}


def threefold_q(deg_K, h, log_disc_K, log_conductor_norm, grh=True,
                c=None, precision_bits=_DEFAULT_PRECISION):
    """Threshold beyond which no mod-l image of an abelian threefold with
    7-torsion rational over K sits in a tensor-decomposed subgroup, as the
    exclusion machinery requires.

    The effective Chebotarev input q is
    ``b**8 * (log|disc K| + log conductor-norm)**2`` under GRH and
    ``exp(WINCKLER_CONSTANT * same)`` unconditionally, and the threshold
    is (2q)**48 either way.  Everywhere-good reduction over Q is
    impossible, so the log sum must be at least ln 2; smaller inputs are
    rejected as inconsistent.

    Returns a dict: under GRH ``log_q`` and ``log_bound``; unconditionally
    the doubly exponential size forces ``log_log_q`` and ``log_log_bound``.
    """
    with _ctx(precision_bits):
        logsum = mpfr(log_disc_K) + mpfr(log_conductor_norm)
        if logsum < gmpy2.log(mpfr(2)):
            raise ValueError(
                "log|disc| + log(conductor norm) below ln 2 is impossible "
                "for a nontrivial abelian variety")
        core = (8 * log_b(3 * deg_K, 6, h, precision_bits)
                + 2 * gmpy2.log(logsum))
        if grh:
            log_q = core
            return {
                "mode": "grh",
                "log_q": log_q,
                "log_bound": 48 * (gmpy2.log(mpfr(2)) + log_q),
            }
        log_log_q = gmpy2.log(mpfr(c if c is not None
                                   else WINCKLER_CONSTANT)) + core
        # (2q)**48: ln = 48 (ln 2 + q-part); ln 2 is beyond negligible next
        # to q = exp(exp(log_log_q)), but keep an explicit guard.
        assert log_log_q > 10, "unconditional threshold unexpectedly small"
        return {
            "mode": "unconditional",
            "log_log_q": log_log_q,
            "log_log_bound": gmpy2.log(mpfr(48)) + log_log_q,
        }


def delta_star(abs_disc_K, ram_primes, N, deg_K):
    """Exact integer |disc K|**N * (N * prod p**(1-1/N))**(N deg K)
    = |disc K|**N * N**(N deg K) * prod p**((N-1) deg K).

    Examples
    ========

    >>> delta_star(1, [2, 3], 2, 1)
    24
    """
    if N < 2 or deg_K < 1 or abs_disc_K < 1:
        raise ValueError("need N >= 2, deg_K >= 1, |disc| >= 1")
    out = abs_disc_K ** N * N ** (N * deg_K)
    for p in ram_primes:
        out *= p ** ((N - 1) * deg_K)
    return out


def chebotarev_B(abs_disc_K, ram_primes, N, deg_K,
                 precision_bits=_DEFAULT_PRECISION):
    """Effective Chebotarev threshold 70 * (ln delta_star)**2: below it lies
    a prime of K, of degree one over Q, unramified and outside the given
    set, realizing any requested conjugacy class."""
    d = delta_star(abs_disc_K, ram_primes, N, deg_K)
    with _ctx(precision_bits):
        return 70 * gmpy2.log(mpfr(d)) ** 2


def collins_J(n):
    """Bound on orders of finite subgroups of GL_n in large coprime
    characteristic: (n+1)! once n >= 71, with Jordan-style slack n**4 (n+2)!
    below.

    Examples
    ========

    >>> collins_J(6)
    52254720
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n >= 71:
        return factorial(n + 1)
    return n ** 4 * factorial(n + 2)


def xi_bound(n, precision_bits=_DEFAULT_PRECISION):
    """ln of the explicit closed form
    sqrt(n ln n) * (1 + (ln ln n - 0.975) / (2 ln n)),
    an upper bound for the largest order of a permutation on n letters
    (Landau's function).  Defined for n >= 3, but beware that at n = 3
    itself the closed form (about ln 2.967) falls just short of the true
    maximum 3; the domination only holds from n = 4 on.  Callers that need
    small n exactly should enumerate partitions instead."""
    if n < 3:
        raise ValueError("explicit form needs n >= 3")
    with _ctx(precision_bits):
        ln_n = gmpy2.log(mpfr(n))
        return gmpy2.sqrt(n * ln_n) * (
            1 + (gmpy2.log(ln_n) - mpfr("0.975")) / (2 * ln_n))


def constant_group_threshold(g, deg_K, h, precision_bits=_DEFAULT_PRECISION):
    """ln of the threshold above which the mod-l image cannot be a group of
    constant type: (1/(2g-1)) * ln b over the auxiliary extension of degree
    collins_J(2g) trivializing the finite image."""
    return log_b(collins_J(2 * g) * deg_K, g, h, precision_bits) / (2 * g - 1)


def semistable_psl2_threshold(g):
    """Primes above 2g(g-1)+1 with semistable reduction cannot have a
    2-dimensional-socle (PSL_2-type) image; exact integer threshold."""
    if g < 1:
        raise ValueError("dimension must be positive")
    return 2 * g * (g - 1) + 1
