"""Hyperelliptic curves, point counts, and Frobenius characteristic
polynomials.

A curve is given by an odd-degree model y**2 = g(x) with integer g, so the
genus is (deg g - 1)/2 and there is exactly one point at infinity.  Counts
over F_{p**k} come from the quadratic-character sum

    #C(F_q) = q + 1 + sum_x chi(g(x)),

vectorized with numpy over the whole field (field elements are rows of
base-p digits; multiplication is schoolbook convolution plus a precomputed
reduction table for the extension modulus).  The characteristic polynomial
of Frobenius is then reconstructed from the power sums via Newton's
identities for the top half and the q-symmetry for the bottom half, and
finally re-validated analytically (all roots on |z| = sqrt(p)).
"""

import random
from dataclasses import dataclass

import gmpy2
import numpy as np
from gmpy2 import mpfr

from .config import resolve_settings
from .intpoly import (degree, trim, derivative, poly_discriminant,
                      poly_gcd_rational, functional_equation_holds,
                      expand_trace_form, poly_mul)
from .ffield import check_odd_prime, gf_trim, gf_is_squarefree, build_ext
from .roots import complex_roots

__all__ = [
    "BadReductionError", "HyperellipticCurve", "count_points",
    "frobenius_charpoly", "weil_defects", "validate_weil",
    "random_weil_poly",
]

_CIRCLE_TOLERANCE_BITS = 20      # root disks must sit this close to |z|=sqrt q
_COUNT_FIELD_LIMIT = 10 ** 7     # enumerated field size cap
_COUNT_PRIME_LIMIT = 2 ** 31     # int64 products must not overflow


class BadReductionError(ValueError):
    """The curve has bad reduction at the requested prime."""


@dataclass(frozen=True)
class HyperellipticCurve:
    """y**2 = g(x) with deg g odd, the coefficients of g constant-first."""
    g_coeffs: tuple

    def __init__(self, g_coeffs):
        coeffs = tuple(int(c) for c in trim(list(g_coeffs)))
        d = degree(list(coeffs))
        if d < 3 or d % 2 == 0:
            raise ValueError(
                "need an odd-degree model y^2 = g(x) with deg g >= 3")
        if poly_discriminant(list(coeffs)) == 0:
            raise ValueError("g(x) must be squarefree (smooth model)")
        object.__setattr__(self, "g_coeffs", coeffs)

    @property
    def genus(self):
        return (degree(list(self.g_coeffs)) - 1) // 2

    def has_good_reduction(self, p):
        if p == 2:
            return False
        g = list(self.g_coeffs)
        if g[-1] % p == 0:
            return False
        return gf_is_squarefree(gf_trim(g, p), p)


def _check_reduction(curve, p):
    if p == 2:
        raise BadReductionError(
            "bad reduction at p=2: the model y**2 = g(x) is singular in "
            "characteristic 2")
    check_odd_prime(p)
    if not curve.has_good_reduction(p):
        raise BadReductionError(f"bad reduction at p={p}")


def _reduction_rows(modulus, p, k):
    """x**(k+j) mod modulus for j = 0..k-2, as length-k coefficient rows."""
    rows = []
    cur = [(-c) % p for c in modulus[:k]]
    rows.append(cur)
    for _ in range(k - 2):
        top = cur[k - 1]
        cur = [(0 + top * rows[0][0]) % p] + [
            (cur[i - 1] + top * rows[0][i]) % p for i in range(1, k)]
        rows.append(cur)
    return rows


def _mulmod(a, b, red, p, k):
    """Row-wise product of two (N, k) digit arrays modulo the field modulus."""
    n = a.shape[0]
    conv = np.zeros((n, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        ai = a[:, i]
        for j in range(k):
            conv[:, i + j] = (conv[:, i + j] + ai * b[:, j]) % p
    low = conv[:, :k].copy()
    for j in range(k - 1):
        t = conv[:, k + j]
        for col in range(k):
            r = red[j][col]
            if r:
                low[:, col] = (low[:, col] + t * r) % p
    return low


def count_points(curve, p, k=1, seed=None):
    """#C(F_{p**k}) for a good odd prime p, 1 <= k <= genus.

    The quadratic character is evaluated through a squares table over the
    whole field, so memory and time are O(p**k).
    """
    settings = resolve_settings(seed=seed)
    _check_reduction(curve, p)
    if not 1 <= k <= curve.genus:
        raise ValueError(
            f"extension degree k={k} out of range 1..genus={curve.genus}")
    if p >= _COUNT_PRIME_LIMIT:
        raise ValueError(f"point counting supports p < 2**31, got {p}")
    q = p ** k
    if q > _COUNT_FIELD_LIMIT:
        raise ValueError(f"field size {q} exceeds enumeration limit")

    field = build_ext(p, k, settings.seed)
    red = _reduction_rows(field.modulus, p, k) if k > 1 else []
    codes = np.arange(q, dtype=np.int64)
    digits = np.empty((q, k), dtype=np.int64)
    rest = codes
    for col in range(k):
        digits[:, col] = rest % p
        rest = rest // p
    weights = np.array([p ** i for i in range(k)], dtype=np.int64)

    squares = _mulmod(digits, digits, red, p, k) @ weights
    chi = np.full(q, -1, dtype=np.int64)
    chi[squares] = 1
    chi[0] = 0

    acc = np.zeros((q, k), dtype=np.int64)
    for c in reversed(curve.g_coeffs):
        acc = _mulmod(acc, digits, red, p, k)
        acc[:, 0] = (acc[:, 0] + c) % p
    values = acc @ weights
    total = int(chi[values].sum())

    count = q + 1 + total
    s = count - (q + 1)
    if s * s > 4 * curve.genus ** 2 * q:
        raise AssertionError("point count violates the Weil bound")
    return count


# ------------------------------------------------------------------
# characteristic polynomial of Frobenius
# ------------------------------------------------------------------

def _newton_top_half(power_sums, g):
    """Elementary symmetric functions e_1..e_g from power sums p_1..p_g,
    raising ValueError when the counts cannot come from an integer
    polynomial."""
    e = [1]
    for k in range(1, g + 1):
        acc = 0
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc += term if i % 2 == 1 else -term
        quot, rem = divmod(acc, k)
        if rem != 0:
            raise ValueError(
                "inconsistent point counts: Newton recursion is non-integral")
        e.append(quot)
    return e


def frobenius_charpoly(curve, p, counts=None, seed=None):
    """Characteristic polynomial of Frobenius at a good prime p, as a
    constant-first integer list of degree 2*genus, plus the point counts
    used.

    ``counts`` may supply #C(F_{p**k}) for k = 1..genus directly (skipping
    the enumeration); inconsistent counts raise ValueError.
    """
    _check_reduction(curve, p)
    g = curve.genus
    if counts is None:
        counts = [count_points(curve, p, k, seed=seed) for k in range(1, g + 1)]
    else:
        counts = [int(n) for n in counts]
        if len(counts) != g:
            raise ValueError(f"need exactly {g} counts, got {len(counts)}")
    power_sums = [p ** k + 1 - counts[k - 1] for k in range(1, g + 1)]
    for k, s in enumerate(power_sums, start=1):
        if s * s > 4 * g * g * p ** k:
            raise ValueError(
                f"inconsistent point counts: |trace| over F_p^{k} "
                "violates the Weil bound")
    e = _newton_top_half(power_sums, g)

    f = [0] * (2 * g + 1)
    f[2 * g] = 1
    for k in range(1, g + 1):
        f[2 * g - k] = (-1) ** k * e[k]
    for t in range(1, g + 1):
        f[g - t] = p ** t * f[g + t]

    defects = weil_defects(f, p)
    if defects:
        raise ValueError("inconsistent point counts: " + "; ".join(defects))
    return f, counts


# ------------------------------------------------------------------
# Weil validation
# ------------------------------------------------------------------

def weil_defects(f, q, precision_bits=64):
    """Reasons why f fails to be a q-Weil polynomial (monic, even degree,
    q-symmetric, all roots on |z| = sqrt(q) within 2**-20).  Empty list
    means valid."""
    f = trim(f)
    d = degree(f)
    out = []
    if d < 2 or d % 2 != 0:
        return [f"degree {d} is not a positive even integer"]
    if f[-1] != 1:
        out.append("not monic")
    if not functional_equation_holds(f, q):
        out.append("q-symmetric functional equation fails")
        return out
    # roots: use the squarefree part so repeated-root inputs still get a
    # circle check
    sqf = f
    if poly_discriminant(f) == 0:
        gcd = poly_gcd_rational(f, derivative(f))
        from fractions import Fraction
        a = [Fraction(c) for c in trim(f)]
        b = [Fraction(c) for c in gcd]
        qpoly = [Fraction(0)] * (len(a) - len(b) + 1)
        for i in range(len(qpoly) - 1, -1, -1):
            c = a[i + len(b) - 1] / b[-1]
            qpoly[i] = c
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
        # primitive divisor of an integer polynomial: quotient is integral
        assert all(c.denominator == 1 for c in qpoly)
        sqf = [int(c) for c in qpoly]
    tol = mpfr(2) ** -_CIRCLE_TOLERANCE_BITS
    target = gmpy2.sqrt(mpfr(q, precision=precision_bits + 32))
    for z, r in complex_roots(sqf, precision_bits):
        if abs(abs(z) - target) + r > tol:
            out.append(
                f"root near {complex(z):.6g} is off the |z|=sqrt({q}) circle")
            break
    return out


def validate_weil(f, q, precision_bits=64):
    """True when f is a q-Weil polynomial (see :func:`weil_defects`)."""
    return not weil_defects(f, q, precision_bits)


def random_weil_poly(g, q, seed=0):
    """A random monic q-Weil polynomial of degree 2g with distinct roots.

    Samples the real roots of the trace polynomial inside
    (-2 sqrt q, 2 sqrt q) with a safety margin, rounds the resulting
    coefficients to integers, and rejects anything the rounding pushed off
    the circle.  Deterministic in the seed."""
    rng = random.Random(f"weil:{seed}:{g}:{q}")
    bound = 0.9 * 2.0 * float(q) ** 0.5
    while True:
        h = [1.0]
        for _ in range(g):
            h = poly_mul(h, [-rng.uniform(-bound, bound), 1.0])
        coeffs = [round(c) for c in h]
        coeffs[-1] = 1
        f = expand_trace_form(coeffs, q)
        if degree(f) == 2 * g and poly_discriminant(f) != 0 \
                and validate_weil(f, q):
            return f
