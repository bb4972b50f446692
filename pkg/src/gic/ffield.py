"""Arithmetic over F_p and small extensions F_{p**k}, char p odd.

Dense polynomials over F_p use the same constant-first list layout as the
integer kernel, with coefficients normalized to ``0..p-1``.  Factorization
is the standard pipeline (squarefree decomposition, then distinct-degree,
then equal-degree splitting with a seeded generator), with the output put
in a canonical order so results are reproducible no matter how the random
splitting went.

Characteristic 2 is rejected everywhere — every quadratic-character and
half-exponent trick used downstream needs p odd — and primes must fit in
63 bits so machine-word paths elsewhere stay exact.
"""

import random
from math import prod

from .intpoly import degree as z_degree

__all__ = [
    "is_prime", "check_odd_prime",
    "gf_trim", "gf_monic", "gf_add", "gf_sub", "gf_mul", "gf_divmod",
    "gf_quo", "gf_rem", "gf_gcd", "gf_diff", "gf_eval", "gf_pow_mod",
    "gf_is_irreducible", "gf_is_squarefree",
    "factor_mod", "quad_char", "reciprocal_transform_mod",
    "ExtField", "build_ext",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for every n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_odd_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if p >= 2 ** 63:
        raise ValueError("primes must be below 2**63")
    return p


# ------------------------------------------------------------------
# F_p[x] basics
# ------------------------------------------------------------------

def gf_trim(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def gf_degree(f):
    return len(f) - 1


def gf_monic(f, p):
    """Return ``(lc, f/lc)``; the zero polynomial maps to ``(0, [])``."""
    f = gf_trim(f, p)
    if not f:
        return 0, []
    lc = f[-1]
    if lc == 1:
        return 1, f
    inv = pow(lc, -1, p)
    return lc, [c * inv % p for c in f]


def gf_add(f, g, p):
    n = max(len(f), len(g))
    return gf_trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                    for i in range(n)], p)


def gf_sub(f, g, p):
    n = max(len(f), len(g))
    return gf_trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)
                    for i in range(n)], p)


def gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return gf_trim(out, p)


def gf_divmod(f, g, p):
    f = gf_trim(f, p)
    g = gf_trim(g, p)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return [], f
    inv = pow(g[-1], -1, p)
    rem = list(f)
    quo = [0] * (len(f) - len(g) + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(g) - 1] * inv % p
        if c:
            quo[i] = c
            for j, b in enumerate(g):
                rem[i + j] = (rem[i + j] - c * b) % p
    return gf_trim(quo, p), gf_trim(rem, p)


def gf_quo(f, g, p):
    return gf_divmod(f, g, p)[0]


def gf_rem(f, g, p):
    return gf_divmod(f, g, p)[1]


def gf_gcd(f, g, p):
    f = gf_trim(f, p)
    g = gf_trim(g, p)
    while g:
        f, g = g, gf_rem(f, g, p)
    return gf_monic(f, p)[1]


def gf_diff(f, p):
    return gf_trim([i * c for i, c in enumerate(f)][1:], p)


def gf_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def gf_pow_mod(f, e, m, p):
    """``f**e mod m`` by binary powering."""
    result = [1]
    f = gf_rem(f, m, p)
    while e > 0:
        if e & 1:
            result = gf_rem(gf_mul(result, f, p), m, p)
        f = gf_rem(gf_mul(f, f, p), m, p)
        e >>= 1
    return result


def gf_is_squarefree(f, p):
    _, f = gf_monic(f, p)
    if gf_degree(f) < 1:
        return True
    return gf_gcd(f, gf_diff(f, p), p) == [1]


def gf_is_irreducible(f, p):
    """Rabin's test: x**(p**n) == x (mod f) and the degree-n/q Frobenius
    fixes nothing for each prime q | n."""
    _, f = gf_monic(f, p)
    n = gf_degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # Frobenius powers x**(p**d) mod f, computed incrementally.
    frob = [x]
    t = x
    for _ in range(n):
        t = gf_pow_mod(t, p, f, p)
        frob.append(t)
    if frob[n] != x:
        return False
    for q in {q for q in (2, 3, 5, 7) if n % q == 0}:
        h = gf_sub(frob[n // q], x, p)
        if gf_gcd(h, f, p) != [1]:
            return False
    return True


# ------------------------------------------------------------------
# factorization
# ------------------------------------------------------------------

def _sqf_list(f, p):
    """Squarefree decomposition ``(lc, [(g, multiplicity)])`` in F_p[x]."""
    lc, f = gf_monic(f, p)
    factors = []
    n = 1
    while gf_degree(f) > 0:
        fp = gf_diff(f, p)
        if not fp:
            # polynomial in x**p: take the p-th root (coefficients are
            # already p-th powers since c**p == c over F_p)
            f = f[::p]
            n *= p
            continue
        g = gf_gcd(f, fp, p)
        h = gf_quo(f, g, p)
        i = 1
        while h != [1]:
            G = gf_gcd(g, h, p)
            H = gf_quo(h, G, p)
            if gf_degree(H) > 0:
                factors.append((H, i * n))
            i += 1
            g = gf_quo(g, G, p)
            h = G
        f = g
    return lc, factors


def _ddf(f, p):
    """Distinct-degree splitting of a squarefree monic f:
    list of (product-of-irreducibles-of-degree-d, d)."""
    out = []
    x = [0, 1]
    t = x
    d = 0
    while gf_degree(f) > 2 * (d + 1) - 1:
        d += 1
        t = gf_pow_mod(t, p, f, p)
        g = gf_gcd(gf_sub(t, x, p), f, p)
        if g != [1]:
            out.append((g, d))
            f = gf_quo(f, g, p)
            t = gf_rem(t, f, p)
    if gf_degree(f) > 0:
        out.append((f, gf_degree(f)))
    return out


def _edf(f, d, p, rng):
    """Equal-degree splitting (Cantor-Zassenhaus, p odd) of a monic
    squarefree product of irreducibles all of degree d."""
    n = gf_degree(f)
    if n == d:
        return [f]
    half = (p ** d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = gf_trim(a, p)
        if gf_degree(a) < 1:
            continue
        g = gf_gcd(a, f, p)
        if g == [1]:
            b = gf_pow_mod(a, half, f, p)
            g = gf_gcd(gf_sub(b, [1], p), f, p)
        if g != [1] and g != f:
            return _edf(g, d, p, rng) + _edf(gf_quo(f, g, p), d, p, rng)


def factor_mod(f, p, seed=0):
    """Full factorization of ``f`` over F_p.

    Returns ``(lc, [(factor, multiplicity), ...])`` with every factor monic
    irreducible, ordered by (degree, coefficient tuple) so the result does
    not depend on the seed used for the internal splitting.

    Examples
    ========

    >>> factor_mod([2, 0, 1], 3)          # x^2+2 = (x+1)(x+2) mod 3
    (1, [([1, 1], 1), ([2, 1], 1)])
    >>> factor_mod([1, 2, 1], 5)          # (x+1)^2
    (1, [([1, 1], 2)])
    """
    check_odd_prime(p)
    lc, f = gf_monic(f, p)
    if lc == 0:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(f"factor:{seed}:{p}")
    found = []
    _, squarefree_parts = _sqf_list(f, p)
    for g, mult in squarefree_parts:
        for h, d in _ddf(g, p):
            for irr in _edf(h, d, p, rng):
                found.append((irr, mult))
    found.sort(key=lambda fm: (len(fm[0]), tuple(fm[0])))
    return lc, found


def quad_char(a, p):
    """Legendre symbol (a/p) in {-1, 0, 1}, p an odd prime."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def reciprocal_transform_mod(phi, q, p):
    """The root map ``mu -> q/mu`` on polynomials over F_p (so exactness is
    replaced by field division).  Needs phi(0) and q invertible mod p."""
    check_odd_prime(p)
    phi = gf_trim(phi, p)
    if not phi or phi[0] == 0:
        raise ValueError("reciprocal transform needs a nonzero constant term")
    if q % p == 0:
        raise ValueError("q must be invertible modulo p")
    d = gf_degree(phi)
    inv0 = pow(phi[0], -1, p)
    return gf_trim([phi[d - j] * pow(q % p, d - j, p) * inv0
                    for j in range(d + 1)], p)


# ------------------------------------------------------------------
# extension fields
# ------------------------------------------------------------------

class ExtField:
    """F_{p**k} presented as F_p[x] modulo a monic irreducible of degree k.

    Elements are k-tuples of ints (coefficients, constant first), hashable
    and comparable, so they can live in sets and serve as dict keys in the
    eigenvalue-structure searches.
    """

    def __init__(self, p, modulus):
        check_odd_prime(p)
        _, modulus = gf_monic(modulus, p)
        k = gf_degree(modulus)
        if k < 1:
            raise ValueError("modulus must have degree >= 1")
        if k > 1 and not gf_is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p ** k
        self.zero = (0,) * k
        self.one = tuple([1] + [0] * (k - 1))

    def __repr__(self):
        return f"ExtField(p={self.p}, k={self.k})"

    def from_int(self, n):
        return tuple([n % self.p] + [0] * (self.k - 1))

    def from_coeffs(self, coeffs):
        c = gf_rem(gf_trim(list(coeffs), self.p), self.modulus, self.p)
        return tuple(c + [0] * (self.k - len(c)))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        c = gf_rem(gf_mul(list(a), list(b), self.p), self.modulus, self.p)
        return tuple(c + [0] * (self.k - len(c)))

    def inv(self, a):
        f = gf_trim(list(a), self.p)
        if not f:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in F_p[x]
        r0, r1 = self.modulus, f
        s0, s1 = [], [1]
        while r1:
            q, r = gf_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, self.p), self.p)
        lc_inv = pow(r0[-1], -1, self.p)
        c = gf_trim([x * lc_inv for x in s0], self.p)
        return tuple(c + [0] * (self.k - len(c)))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self):
        """All p**k field elements, lexicographic in coefficient order."""
        from itertools import product as iproduct
        for tup in iproduct(range(self.p), repeat=self.k):
            yield tup

    def eval_poly(self, coeffs, x):
        """Evaluate an integer polynomial at a field element."""
        acc = self.zero
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), self.from_int(c))
        return acc


def build_ext(p, k, seed=0):
    """Construct F_{p**k} with a deterministically chosen (seeded) monic
    irreducible modulus.  Supports 1 <= k <= 8 and p an odd prime."""
    check_odd_prime(p)
    if not 1 <= k <= 8:
        raise ValueError("extension degree must be between 1 and 8")
    if k == 1:
        return ExtField(p, [0, 1])
    rng = random.Random(f"modulus:{seed}:{p}:{k}")
    while True:
        cand = [rng.randrange(p) for _ in range(k)] + [1]
        if gf_is_irreducible(cand, p):
            return ExtField(p, cand)
