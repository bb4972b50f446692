"""Eigenvalue-structure analysis over small fields.

A 6-element multiset of nonzero field elements is *of tensor-product
type* when it factors as {lambda_1, lambda_2} * {1, beta, beta^-1}
(pairwise products with multiplicity).  These decompositions, the
weak-independence condition that makes them unique, the count of
circle-subgroup elements gamma giving weakly independent eigenvalue sets
{a^{+-1}} * {1, gamma^{+-1}}, and membership in the tensor-structure
variety are all computed here by exhaustive search — the instance sizes
(six values, 216 equation cases) make anything cleverer pointless.

Everything is parameterized over a tiny field protocol so exact-rational
unit tests exercise the same code paths as the mod-l computations.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product

from .ffield import ExtField, build_ext, check_odd_prime, is_prime
from .weyl import primes_up_to

__all__ = [
    "RationalField", "PrimeField", "QuadraticExtField",
    "EigenMultiset", "TensorDecomposition",
    "decompose_tensor", "weakly_independent",
    "sigma_gamma_scan", "circle_square_subgroup_order", "u_membership",
]


# ------------------------------------------------------------------
# field protocol: one/zero, arithmetic, hashable elements, a sort key
# ------------------------------------------------------------------

class RationalField:
    """Exact rationals; elements are Fraction instances."""
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def sort_key(self, a):
        return (a.numerator, a.denominator)


class PrimeField:
    """Integers mod an odd prime; elements are ints in 0..p-1."""

    def __init__(self, p):
        check_odd_prime(p)
        self.p = p
        self.name = f"F_{p}"
        self.zero = 0
        self.one = 1

    def convert(self, x):
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def sort_key(self, a):
        return a


class QuadraticExtField:
    """The quadratic extension of F_p; elements are coefficient pairs."""

    def __init__(self, p, modulus=None, seed=0):
        check_odd_prime(p)
        if modulus is not None:
            self.ext = ExtField(p, modulus)
        else:
            self.ext = build_ext(p, 2, seed)
        if self.ext.k != 2:
            raise ValueError("modulus must have degree 2")
        self.p = p
        self.name = f"F_{p}^2"
        self.zero = (0, 0)
        self.one = (1, 0)

    def convert(self, x):
        if isinstance(x, tuple):
            return tuple(c % self.p for c in x)
        return (x % self.p, 0)

    def add(self, a, b):
        return self.ext.add(a, b)

    def sub(self, a, b):
        return self.ext.sub(a, b)

    def mul(self, a, b):
        return self.ext.mul(a, b)

    def inv(self, a):
        return self.ext.inv(a)

    def div(self, a, b):
        return self.ext.mul(a, self.ext.inv(b))

    def is_zero(self, a):
        return all(c % self.p == 0 for c in a)

    def sort_key(self, a):
        return a


def _field_pow(field, a, e):
    if e < 0:
        return _field_pow(field, field.inv(a), -e)
    out = field.one
    while e:
        if e & 1:
            out = field.mul(out, a)
        a = field.mul(a, a)
        e >>= 1
    return out


# ------------------------------------------------------------------
# tensor decompositions
# ------------------------------------------------------------------

@dataclass(frozen=True)
class EigenMultiset:
    """A multiset of nonzero field elements (the eigenvalues of one
    semisimple element, with multiplicity)."""
    field: object
    values: tuple

    def __post_init__(self):
        if any(self.field.is_zero(v) for v in self.values):
            raise ValueError("eigenvalues must be nonzero")


@dataclass(frozen=True)
class TensorDecomposition:
    """A factorization {lambda_1, lambda_2} * {1, beta, beta^-1} of a
    six-element multiset."""
    field: object
    lambdas: tuple          # (lambda_1, lambda_2)
    beta: object

    def psi(self):
        f = self.field
        return (f.one, self.beta, f.inv(self.beta))

    def products(self):
        f = self.field
        return tuple(f.mul(lam, s) for lam in self.lambdas
                     for s in self.psi())

    def as_dict(self):
        return {"lambdas": [repr(v) for v in self.lambdas],
                "beta": repr(self.beta)}


def decompose_tensor(eigen):
    """All tensor-product-type factorizations of a 6-element multiset, up
    to the symmetries beta <-> beta^-1 and lambda_1 <-> lambda_2; empty
    when the multiset is not of tensor-product type.

    Exhaustive: lambda_1 must itself be one of the six values (1 lies in
    the second factor), and lambda_1 * beta must be another, so there are
    at most 36 candidate (lambda_1, beta) pairs to test.
    """
    f = eigen.field
    values = eigen.values
    if len(values) != 6:
        raise ValueError("need exactly six eigenvalues")
    pool = Counter(values)
    found = {}
    for lam1 in set(values):
        for e in set(values):
            beta = f.div(e, lam1)
            psi = (f.one, beta, f.inv(beta))
            part1 = Counter(f.mul(lam1, s) for s in psi)
            if any(pool[k] < c for k, c in part1.items()):
                continue
            rest = pool - part1
            for lam2 in set(rest):
                part2 = Counter(f.mul(lam2, s) for s in psi)
                if part2 != rest:
                    continue
                lams = tuple(sorted((lam1, lam2), key=f.sort_key))
                beta_c = min(beta, f.inv(beta), key=f.sort_key)
                found[(lams, beta_c)] = TensorDecomposition(f, lams, beta_c)
    return [found[k] for k in sorted(found)]


def weakly_independent(dec):
    """True when the six products are pairwise distinct and the equation
    (x1 psi1)^2 = (x2 psi2)(x3 psi3), over all 2^3 * 3^3 = 216 choices of
    x_i in {lambda_1, lambda_2} and psi_i in {1, beta, beta^-1}, has no
    solutions beyond the two formal families (equal x's with equal psi's,
    and equal x's with psi-exponents summing to twice the first).
    """
    f = dec.field
    if len(set(dec.products())) != 6:
        return False
    lams = dec.lambdas
    power = {-1: f.inv(dec.beta), 0: f.one, 1: dec.beta}
    for i1, i2, i3 in product((0, 1), repeat=3):
        for e1, e2, e3 in product((-1, 0, 1), repeat=3):
            lhs = f.mul(lams[i1], power[e1])
            lhs = f.mul(lhs, lhs)
            rhs = f.mul(f.mul(lams[i2], power[e2]),
                        f.mul(lams[i3], power[e3]))
            if lhs == rhs:
                formal = i1 == i2 == i3 and 2 * e1 == e2 + e3
                if not formal:
                    return False
    return True


# ------------------------------------------------------------------
# the gamma scan over the circle subgroup
# ------------------------------------------------------------------

def circle_square_subgroup_order(ell):
    """Order of the square subgroup of the norm-one circle group over
    F_ell: (ell - 1)/2 when -1 is a square mod ell, else (ell + 1)/2."""
    check_odd_prime(ell)
    return (ell - 1) // 2 if ell % 4 == 1 else (ell + 1) // 2


def _factorize_small(n):
    out = {}
    for p in primes_up_to(10 ** 6):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if not is_prime(n):
            raise ValueError("group order too hard to factor for the scan")
        out[n] = out.get(n, 0) + 1
    return out


def _generator(field, order, candidates):
    prime_divisors = list(_factorize_small(order))
    for g in candidates:
        if field.is_zero(g):
            continue
        if all(_field_pow(field, g, order // r) != field.one
               for r in prime_divisors):
            return g
    raise ArithmeticError("no generator found")   # unreachable


def _square_circle_elements(ell):
    """The square subgroup of the circle group, as explicit elements of
    F_ell (when -1 is a square, the circle is the full multiplicative
    group) or of F_ell[i] (generated by the (ell-1)-st power of a
    generator, squared)."""
    if ell % 4 == 1:
        field = PrimeField(ell)
        gen = _generator(field, ell - 1, range(2, ell))
        gamma0 = field.mul(gen, gen)
        size = (ell - 1) // 2
    else:
        field = QuadraticExtField(ell, modulus=[1, 0, 1])   # i^2 = -1
        cands = ((a, b) for b in range(ell) for a in range(ell))
        gen = _generator(field, ell * ell - 1, cands)
        gamma0 = _field_pow(field, gen, 2 * (ell - 1))
        size = (ell + 1) // 2
    out = []
    g = field.one
    for _ in range(size):
        out.append(g)
        g = field.mul(g, gamma0)
    assert g == field.one and len(set(out)) == size
    return field, out


def sigma_gamma_scan(ell, a=None, with_details=False):
    """Count the elements gamma of the square circle subgroup for which
    the eigenvalue multiset {a, a^-1} * {1, gamma, gamma^-1} is weakly
    independent.

    For ell > 101 at most 50 gammas can fail, so the count is at least
    the subgroup order minus 50; smaller ell still get their exact count.
    `a` is an element of F_ell of multiplicative order at least 5
    (defaulting to the smallest such integer).
    """
    check_odd_prime(ell)
    if a is None:
        a = _smallest_high_order_element(ell)
    a %= ell
    if _order_at_most_four(a, ell):
        raise ValueError("the base eigenvalue must have order >= 5")

    field, gammas = _square_circle_elements(ell)
    a_elt = field.convert(a)
    lams = tuple(sorted((a_elt, field.inv(a_elt)), key=field.sort_key))
    count = 0
    witnesses = []
    for gamma in gammas:
        dec = TensorDecomposition(field, lams, gamma)
        if weakly_independent(dec):
            count += 1
        elif with_details:
            witnesses.append(gamma)
    if with_details:
        return {"ell": ell, "a": a, "count": count,
                "subgroup_order": len(gammas),
                "failing_gammas": [repr(g) for g in witnesses]}
    return count


def _order_at_most_four(a, ell):
    if a % ell == 0:
        return True
    x = 1
    for _ in range(4):
        x = x * a % ell
        if x == 1:
            return True
    return False


def _smallest_high_order_element(ell):
    for a in range(2, ell):
        if not _order_at_most_four(a, ell):
            return a
    raise ValueError(f"no element of order >= 5 modulo {ell}")


# ------------------------------------------------------------------
# tensor-structure variety membership
# ------------------------------------------------------------------

def u_membership(values, m, n, field=None):
    """True iff the 2mn nonzero values, in some order, satisfy every
    defining binomial of the tensor-structure variety for (m, n) — i.e.
    iff they factor as {lambda_1..lambda_2m} * {1, beta_j^{+-1}}.

    The search works on the product-decomposition characterization rather
    than raw permutation enumeration: each lambda_i is itself one of the
    values, each beta_j a ratio of two of them.
    """
    if n % 2 == 0 or n < 1 or m < 1:
        raise ValueError("need n odd and m >= 1")
    if field is None:
        field = RationalField()
        values = [field.convert(v) for v in values]
    if len(values) != 2 * m * n:
        raise ValueError(f"need exactly {2 * m * n} values")
    if any(field.is_zero(v) for v in values):
        raise ValueError("values must be nonzero")
    pool = Counter(values)
    half = (n - 1) // 2
    if half == 0:
        return True                       # no binomials to satisfy

    ratios = {field.div(e, lam) for e in pool for lam in pool}

    def strip_all(rest, psi):
        # peel off lambda * psi layers until nothing remains
        if not rest:
            return True
        for lam in set(rest):
            layer = Counter(field.mul(lam, s) for s in psi)
            if any(rest[k] < c for k, c in layer.items()):
                continue
            if strip_all(rest - layer, psi):
                return True
        return False

    for betas in combinations_with_replacement(sorted(ratios), half):
        psi = [field.one]
        for b in betas:
            psi += [b, field.inv(b)]
        if strip_all(pool, tuple(psi)):
            return True
    return False
