"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own arithmetic: point
counts are redone with throwaway tuple-based field arithmetic, and power
sums come straight from Newton's identities, so agreement with the library
is evidence rather than tautology.
"""

import itertools

import pytest

# y^2 = x^7 - x^6 - 5x^5 + 4x^4 + 5x^3 - x^2 - 5x + 3, constant term first
EXAMPLE_G = [3, -5, -1, 5, 4, -5, -1, 1]


@pytest.fixture(scope="session")
def example_curve():
    from gic import HyperellipticCurve
    return HyperellipticCurve(tuple(EXAMPLE_G))


def brute_count(g_coeffs, p, k):
    """#C(F_{p**k}) for y**2 = g(x), counted from scratch.

    Field elements are coefficient tuples modulo the first degree-k monic
    polynomial with no root in F_p (k <= 3, so no-root means irreducible);
    squareness is decided by raising to (q-1)/2.  One point at infinity for
    odd-degree g.
    """
    assert len(g_coeffs) % 2 == 0 and k <= 3
    if k == 1:
        els = list(range(p))
        mul = lambda a, b: (a * b) % p
        one, zero = 1 % p, 0
        embed = lambda c: c % p
    else:
        h = None
        for tail in itertools.product(range(p), repeat=k):
            cand = list(tail) + [1]
            if all(sum(c * pow(x, i, p) for i, c in enumerate(cand)) % p
                   for x in range(p)):
                h = cand
                break

        def mul(a, b):
            res = [0] * (2 * k - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        res[i + j] = (res[i + j] + ai * bj) % p
            for d in range(2 * k - 2, k - 1, -1):
                c = res[d]
                if c:
                    res[d] = 0
                    for j in range(k):
                        res[d - k + j] = (res[d - k + j] - c * h[j]) % p
            return tuple(res[:k])

        els = [tuple(v) for v in itertools.product(range(p), repeat=k)]
        one, zero = (1,) + (0,) * (k - 1), (0,) * k
        embed = lambda c: (c % p,) + (0,) * (k - 1)

    def geval(x):
        acc = embed(g_coeffs[-1])
        for c in reversed(g_coeffs[:-1]):
            acc = mul(acc, x)
            if k == 1:
                acc = (acc + c) % p
            else:
                acc = ((acc[0] + c) % p,) + acc[1:]
        return acc

    q = p ** k

    def is_square(v):
        if v == zero:
            return None
        e, acc, base = (q - 1) // 2, one, v
        while e:
            if e & 1:
                acc = mul(acc, base)
            base = mul(base, base)
            e >>= 1
        return acc == one

    n = 1
    for x in els:
        s = is_square(geval(x))
        n += 1 if s is None else (2 if s else 0)
    return n


def newton_power_sums(f, upto):
    """Power sums p_1..p_upto of the roots of monic constant-first f,
    via p_k + a_1 p_{k-1} + ... + a_{k-1} p_1 + k a_k = 0 where a_j is the
    coefficient of x**(n-j)."""
    n = len(f) - 1
    assert f[-1] == 1 and upto <= n
    a = [f[n - j] for j in range(n + 1)]          # a[0] = 1
    sums = []
    for k in range(1, upto + 1):
        s = -k * a[k] - sum(a[i] * sums[k - 1 - i] for i in range(1, k))
        sums.append(s)
    return sums
