"""Galois-group certification for q-symmetric polynomials.

The Galois group of a degree-2g polynomial whose roots come in pairs
multiplying to q embeds into the group of signed permutations of the g
pairs (order 2**g * g!).  Conjugacy classes there are pairs of partitions
(positive cycle lengths | negative cycle lengths) with total size g, and
the class of Frobenius at an auxiliary prime ell is readable from how the
polynomial factors mod ell together with how the root pairing permutes the
factors.  Realizing *every* class forces the group to be everything,
because a proper subgroup of a finite group always misses an entire
conjugacy class of the big group.  That is the whole certificate: a
witness prime per class.

The same factor-pattern scanning certifies that a degree-7 polynomial has
Galois group exactly A_7: an irreducibility witness gives transitivity
(hence primitivity, the degree being prime), a square discriminant puts
the group inside A_7, and a (5,1,1) factorization gives an element of
order 5, which no proper primitive group of degree 7 can accommodate.
"""

from dataclasses import dataclass, field

import math

from .intpoly import degree, trim, poly_discriminant, poly_resultant, \
    functional_equation_holds
from .ffield import (check_odd_prime, is_prime, gf_trim, gf_gcd,
                     factor_mod, reciprocal_transform_mod)

__all__ = [
    "PrimeSkip", "wg_classes", "signed_cycle_type",
    "WeylCertificate", "certify_weyl",
    "A7Certificate", "certify_A7", "primes_up_to",
]

DEFAULT_SCAN_BOUND = 10 ** 4


class PrimeSkip(ValueError):
    """An auxiliary prime fails the preconditions for reading a signed
    cycle type (divides q or the discriminant, or fixes a root pair)."""


def primes_up_to(n):
    """Ascending list of primes <= n (simple sieve)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n + 1) if sieve[i]]


def _partitions(n):
    out = []

    def rec(remaining, cap, cur):
        if remaining == 0:
            out.append(tuple(cur))
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, cur + [part])

    rec(n, n, [])
    return out


def wg_classes(g):
    """Conjugacy classes of the signed permutation group on g pairs, as
    pairs (positive-cycle partition, negative-cycle partition) with the
    sizes adding to g.  Supports 1 <= g <= 6.

    Examples
    ========

    >>> wg_classes(1)
    [((1,), ()), ((), (1,))]
    >>> len(wg_classes(3))
    10
    """
    if not 1 <= g <= 6:
        raise ValueError("supported range is 1 <= g <= 6")
    out = []
    for k in range(g, -1, -1):
        for pos in _partitions(k):
            for neg in _partitions(g - k):
                out.append((pos, neg))
    return out


def signed_cycle_type(f, q, p, seed=0):
    """Signed cycle type of Frobenius at p on the root pairs of f.

    f must be monic of even degree 2g and q-symmetric.  Requires p odd,
    p coprime to q*disc(f), and no root of f mod p fixed by the pairing
    mu -> q/mu (i.e. gcd(f, x**2 - q) = 1 mod p); otherwise PrimeSkip.

    Returns (positive_partition, negative_partition): an irreducible
    factor swapped with a distinct partner of the same degree d
    contributes d to the positive part; a self-paired factor (necessarily
    of even degree 2e) contributes e to the negative part.
    """
    f = trim(f)
    d = degree(f)
    if d < 2 or d % 2 or f[-1] != 1:
        raise ValueError("need a monic polynomial of even degree")
    if not functional_equation_holds(f, q):
        raise ValueError("polynomial is not q-symmetric")
    if p == 2:
        raise PrimeSkip("p=2 cannot separate the root pairing")
    check_odd_prime(p)
    if q % p == 0:
        raise PrimeSkip(f"p={p} divides q")
    if poly_discriminant(f) % p == 0:
        raise PrimeSkip(f"p={p} divides the discriminant")
    fbar = gf_trim(f, p)
    if gf_gcd(fbar, gf_trim([-q, 0, 1], p), p) != [1]:
        raise PrimeSkip(f"p={p} fixes a root pair (shared root with x^2-q)")

    _, factors = factor_mod(fbar, p, seed)
    unmatched = {tuple(phi): phi for phi, _ in factors}
    pos, neg = [], []
    while unmatched:
        _, phi = unmatched.popitem()
        partner = reciprocal_transform_mod(phi, q, p)
        if partner == phi:
            dd = len(phi) - 1
            assert dd % 2 == 0, "self-paired factor of odd degree"
            neg.append(dd // 2)
        else:
            key = tuple(partner)
            assert key in unmatched, "pairing does not permute the factors"
            del unmatched[key]
            pos.append(len(phi) - 1)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


# ------------------------------------------------------------------
# full signed-permutation-group certification
# ------------------------------------------------------------------

@dataclass
class WeylCertificate:
    genus: int
    group_order: int
    certified: bool
    witnesses: dict                       # class -> first witness prime
    missing: list
    skipped_primes: list                  # (prime, reason)
    scan_bound: int
    structural_relations: list = field(default_factory=list)

    def as_dict(self):
        return {
            "genus": self.genus,
            "group_order": self.group_order,
            "certified": self.certified,
            "witnesses": {self._label(c): p
                          for c, p in sorted(self.witnesses.items())},
            "missing_classes": [self._label(c) for c in self.missing],
            "skipped_primes": [[p, reason] for p, reason in self.skipped_primes],
            "scan_bound": self.scan_bound,
            "structural_relations": self.structural_relations,
        }

    @staticmethod
    def _label(cls):
        pos, neg = cls
        return "+".join(map(str, pos)) + "|" + "-".join(map(str, neg))


def _structural_relations(f, q, g):
    """Multiplicative relations mu**(2m) = +/- q**m satisfied by some root,
    detected exactly through resultants; their presence explains why full
    signed-group coverage is impossible."""
    rels = []
    for m in range(1, 2 * g + 1):
        for sign, tag in ((1, "+"), (-1, "-")):
            probe = [-sign * q ** m] + [0] * (2 * m - 1) + [1]
            if poly_resultant(f, probe) == 0:
                rels.append(f"mu^{2 * m} = {tag}q^{m}")
    return rels


def certify_weyl(f, q, scan_bound=DEFAULT_SCAN_BOUND, seed=0):
    """Try to certify that the Galois group of f (monic, degree 2g,
    q-symmetric, squarefree) is the full signed permutation group on the g
    root pairs, by collecting signed cycle types at odd primes up to
    scan_bound until every conjugacy class has a witness.

    Coverage is monotone in scan_bound; primes failing the preconditions
    are recorded and skipped.  On failure the certificate lists the missing
    classes and any exact multiplicative relations among the roots that
    would obstruct full coverage.
    """
    f = trim(f)
    g = degree(f) // 2
    classes = wg_classes(g)
    if poly_discriminant(f) == 0:
        raise ValueError("polynomial must be squarefree")
    witnesses = {}
    skipped = []
    for p in primes_up_to(scan_bound):
        if p == 2:
            continue
        try:
            sct = signed_cycle_type(f, q, p, seed)
        except PrimeSkip as exc:
            skipped.append((p, str(exc)))
            continue
        if sct not in witnesses:
            witnesses[sct] = p
            if len(witnesses) == len(classes):
                break
    missing = [c for c in classes if c not in witnesses]
    cert = WeylCertificate(
        genus=g,
        group_order=2 ** g * math.factorial(g),
        certified=not missing,
        witnesses=witnesses,
        missing=missing,
        skipped_primes=skipped,
        scan_bound=scan_bound,
    )
    if missing:
        cert.structural_relations = _structural_relations(f, q, g)
    return cert


# ------------------------------------------------------------------
# A_7 certification for the curve-defining septic
# ------------------------------------------------------------------

@dataclass
class A7Certificate:
    certified: bool
    discriminant: int
    discriminant_is_square: bool
    irreducibility_witness: int | None
    five_cycle_witness: int | None
    scan_bound: int

    def as_dict(self):
        return {
            "certified": self.certified,
            "discriminant": self.discriminant,
            "discriminant_is_square": self.discriminant_is_square,
            "irreducibility_witness": self.irreducibility_witness,
            "five_cycle_witness": self.five_cycle_witness,
            "scan_bound": self.scan_bound,
        }


def certify_A7(septic, scan_bound=DEFAULT_SCAN_BOUND, seed=0):
    """Certify that a degree-7 integer polynomial has Galois group A_7.

    Three exact facts suffice: (a) irreducible mod some prime, so the
    group is transitive, hence primitive (prime degree); (b) square
    discriminant, so the group lies in A_7; (c) factor pattern (5,1,1) mod
    some prime, so the group has an element of order 5 — and the only
    primitive subgroups of A_7 of order divisible by 5 are A_7 itself.
    """
    septic = trim(septic)
    if degree(septic) != 7:
        raise ValueError("need a degree-7 polynomial")
    disc = poly_discriminant(septic)
    if disc == 0:
        raise ValueError("polynomial must be squarefree")
    root = math.isqrt(disc) if disc > 0 else 0
    is_square = disc > 0 and root * root == disc

    irred = None
    five = None
    for p in primes_up_to(scan_bound):
        if p == 2 or disc % p == 0 or septic[-1] % p == 0:
            continue
        _, factors = factor_mod(gf_trim(septic, p), p, seed)
        pattern = sorted((len(phi) - 1 for phi, _ in factors), reverse=True)
        if irred is None and pattern == [7]:
            irred = p
        if five is None and pattern == [5, 1, 1]:
            five = p
        if irred is not None and five is not None:
            break
    return A7Certificate(
        certified=is_square and irred is not None and five is not None,
        discriminant=disc,
        discriminant_is_square=is_square,
        irreducibility_witness=irred,
        five_cycle_witness=five,
        scan_bound=scan_bound,
    )
