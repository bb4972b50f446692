"""Certified complex roots of squarefree integer polynomials.

Approximation is simultaneous Newton (Aberth-Ehrlich) from a deterministic
starting circle; certification is the classical inclusion bound: for any z
with f'(z) != 0, the disk around z of radius deg(f) * |f(z)/f'(z)| contains
at least one root of f.  Once the n disks are pairwise disjoint they hold
exactly one root each, so disjointness plus a radius target is the whole
certificate.  Floating-point evaluation error is absorbed into the radius
via a running Horner error bound, so the returned disks are genuine
enclosures, not heuristics.

Everything is deterministic: no randomness, and precision escalates by
doubling from the requested level up to a hard cap.
"""

import gmpy2
from gmpy2 import mpfr, mpc

from .config import PRECISION_CAP
from .intpoly import degree, trim, derivative, poly_discriminant

__all__ = ["complex_roots", "PrecisionExhausted"]

_MAX_ITERATIONS = 400


class PrecisionExhausted(ArithmeticError):
    """Raised when root disks cannot be certified below the precision cap."""


def _eval_with_error(coeffs, z, eps):
    """Horner value of ``sum c_k z^k`` plus a forward error bound
    ``(2 deg + 2) * eps * sum |c_k| |z|^k`` valid for round-to-nearest."""
    acc = mpc(0)
    mag = mpfr(0)
    az = abs(z)
    for c in reversed(coeffs):
        acc = acc * z + c
        mag = mag * az + abs(c)
    return acc, mag * (2 * len(coeffs)) * eps


def _initial_points(f, n):
    # Cauchy bound on root moduli, then equally spaced points just inside,
    # rotated off the axes so real-coefficient symmetry cannot trap the
    # iteration on a line.
    lead = abs(f[-1])
    radius = mpfr(1) + max(abs(c) for c in f[:-1]) / lead if n > 0 else mpfr(1)
    pi = gmpy2.const_pi()
    pts = []
    for k in range(n):
        theta = (2 * pi * k) / n + mpfr("0.4") / n
        pts.append(mpc(radius * gmpy2.cos(theta), radius * gmpy2.sin(theta)))
    return pts


def _aberth_pass(f, fp, z):
    n = len(z)
    newton = []
    for zi in z:
        num, _ = _eval_with_error(f, zi, mpfr(0))
        den, _ = _eval_with_error(fp, zi, mpfr(0))
        if den == 0:
            return None
        newton.append(num / den)
    out = []
    moved = mpfr(0)
    for i in range(n):
        s = mpc(0)
        for j in range(n):
            if j != i:
                diff = z[i] - z[j]
                if diff == 0:
                    return None
                s += 1 / diff
        denom = 1 - newton[i] * s
        if denom == 0:
            return None
        w = newton[i] / denom
        out.append(z[i] - w)
        moved = max(moved, abs(w))
    return out, moved


def _certify(f, fp, z, eps, n):
    """Inclusion radius for each approximation, or None if a derivative
    enclosure hits zero."""
    radii = []
    for zi in z:
        fv, fe = _eval_with_error(f, zi, eps)
        dv, de = _eval_with_error(fp, zi, eps)
        lo = abs(dv) - de
        if lo <= 0:
            return None
        radii.append(gmpy2.div(n * (abs(fv) + fe), lo))
    return radii


def _disjoint(z, radii):
    n = len(z)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                return False
    return True


def _sort_key(zr):
    z, _ = zr
    arg = gmpy2.atan2(z.imag, z.real)
    return (arg, abs(z))


def complex_roots(f, precision_bits=128):
    """All complex roots of a squarefree integer polynomial, as pairs
    ``(center, radius)`` of pairwise disjoint disks containing exactly one
    root each, with every radius at most ``2**-(precision_bits // 2)``.

    Deterministic for fixed input and precision.  Escalates working
    precision by doubling when certification fails, and raises
    :class:`PrecisionExhausted` past the cap.  Results are sorted by
    argument (in ``(-pi, pi]``), ties by modulus.

    Examples
    ========

    >>> [(round(complex(z).real, 6), round(complex(z).imag, 6))
    ...  for z, _ in complex_roots([-1, 0, 1])]
    [(1.0, 0.0), (-1.0, 0.0)]
    """
    f = trim(f)
    n = degree(f)
    if n < 1:
        raise ValueError("need degree >= 1")
    if poly_discriminant(f) == 0:
        raise ValueError("polynomial has a repeated root; disks cannot separate")
    if precision_bits < 16:
        raise ValueError("precision must be at least 16 bits")
    target = mpfr(2) ** -(precision_bits // 2)
    fp = derivative(f)

    work = max(2 * precision_bits, precision_bits + 64)
    while work <= PRECISION_CAP:
        with gmpy2.context(precision=work):
            eps = mpfr(2) ** (1 - work)
            tgt = mpfr(2) ** -(precision_bits // 2)
            z = _initial_points(f, n)
            ok = False
            for _ in range(_MAX_ITERATIONS):
                step = _aberth_pass(f, fp, z)
                if step is None:
                    break
                z, moved = step
                if moved < tgt / (4 * n):
                    ok = True
                    break
            if ok:
                radii = _certify(f, fp, z, eps, n)
                if radii is not None:
                    # Round centers to the output precision and absorb the
                    # rounding plus a conversion cushion into the radii, so
                    # the *returned* disks are the certified ones.
                    centers = [mpc(zi, precision=precision_bits + 16)
                               for zi in z]
                    shift = mpfr(2) ** -(precision_bits + 14)
                    final = [(r + abs(zi) * shift) * (1 + mpfr(2) ** -48)
                             for r, zi in zip(radii, z)]
                    if (_disjoint(centers, final)
                            and all(r <= tgt for r in final)):
                        out = sorted(zip(centers, final), key=_sort_key)
                        return [(zi, mpfr(ri, precision=64))
                                for zi, ri in out]
        work *= 2
    raise PrecisionExhausted(
        f"could not certify disjoint root disks below radius {float(target)} "
        f"within {PRECISION_CAP} bits")
