"""Exact exclusion certificates from eigenvalue relations.

Setting: f is a q-Weil polynomial of degree 2g whose Galois group is the
full group of signed permutations of its g root pairs (certified
upstream).  Each obstruction to a maximal mod-l image forces an exact
multiplicative relation among the Frobenius eigenvalues in characteristic
l, so the Galois norm of the corresponding characteristic-zero expression
is a nonzero integer divisible by l.  Computing those norms exactly
therefore turns every obstruction class into a finite list of nonzero
integers whose prime divisors contain all possibly-bad l.

Norms are evaluated numerically over the explicit orbit (2**g * g! signed
permutations) at certified root enclosures, with a running error bound
that is *carried through the product*: the final integer is accepted only
when the enclosure pins it to within 2**-20.  Identically-vanishing
expressions — equalities forced by the pairing mu_i * mu_pair(i) = q alone
— are detected symbolically and never rounded.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm

import gmpy2
from gmpy2 import mpfr, mpc

from .config import PRECISION_CAP, resolve_settings
from .intpoly import degree, trim, poly_resultant, poly_discriminant
from .roots import complex_roots, PrecisionExhausted
from .weyl import primes_up_to

__all__ = [
    "StructuralRelationError", "RootLabeling", "label_roots",
    "Relation", "galois_orbit_norm", "minimum_norm_precision", "f1_f2",
    "ExclusionReport", "tensor_exclusion", "lie_exclusion",
    "minuscule_exclusion", "induced_exclusion",
    "verify_weight_identities", "weyl_group_elements",
]

_ROUNDING_TOLERANCE_BITS = 20


class _EnclosureTooWide(Exception):
    """Root enclosures too wide for the requested norm; escalate."""


class StructuralRelationError(ArithmeticError):
    """The roots satisfy an exact multiplicative relation that the
    certificates assume impossible; the input cannot have the full signed
    permutation group."""


# ------------------------------------------------------------------
# labeled roots
# ------------------------------------------------------------------

def _pair(i, g):
    return 2 * g - 1 - i


@dataclass(frozen=True)
class RootLabeling:
    """Roots of f ordered by argument (then modulus), with index i paired
    to 2g-1-i (0-based), so paired roots multiply to exactly q."""
    f: tuple
    q: int
    g: int
    precision_bits: int
    roots: tuple          # mpc approximations
    radii: tuple          # certified enclosure radii

    def pair(self, i):
        return _pair(i, self.g)

    def at_precision(self, precision_bits):
        if precision_bits <= self.precision_bits:
            return self
        return label_roots(list(self.f), self.q, precision_bits)


def label_roots(f, q, precision_bits=192):
    """Order and pair the roots of a q-Weil polynomial.

    Sorting by argument puts complex-conjugate roots (which are exactly
    the pairs multiplying to q, all roots lying on |z| = sqrt q) in
    mirror positions, so the pairing is i <-> 2g-1-i.  The pairing is then
    *certified*: for each i the only root j whose product with root i is
    consistent with q, given the enclosure radii, must be 2g-1-i, and
    roots squaring to q exactly (which would be self-paired) are excluded
    up front by an exact resultant.
    """
    f = trim(f)
    d = degree(f)
    if d < 2 or d % 2:
        raise ValueError("need even degree >= 2")
    g = d // 2
    if poly_resultant(f, [-q, 0, 1]) == 0:
        raise StructuralRelationError(
            "a root squares to q, so the pairing has a fixed point")
    if poly_discriminant(f) == 0:
        raise ValueError("polynomial must be squarefree")

    prec = precision_bits
    while prec <= PRECISION_CAP:
        disks = complex_roots(f, prec)
        roots = [z for z, _ in disks]
        radii = [r for _, r in disks]
        if _pairing_certified(roots, radii, q, g):
            return RootLabeling(tuple(f), q, g, prec,
                                tuple(roots), tuple(radii))
        prec *= 2
    raise PrecisionExhausted("could not certify the root pairing")


def _pairing_certified(roots, radii, q, g):
    n = 2 * g
    for i in range(n):
        consistent = []
        for j in range(n):
            if j == i:
                continue
            err = (abs(roots[i]) + radii[i]) * radii[j] \
                + (abs(roots[j]) + radii[j]) * radii[i]
            if abs(roots[i] * roots[j] - q) <= err:
                consistent.append(j)
        if consistent != [_pair(i, g)]:
            return False
    return True


# ------------------------------------------------------------------
# relations and their orbit norms
# ------------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """Multiplicative eigenvalue relation  prod_j mu_{slot_j}^{exp_j} = q^{q_exponent},
    stored with 1-based slots; the evaluated expression is the cleared form

        prod_{exp>0} mu^exp  -  q^{q_exponent} * prod_{exp<0} mu^{-exp}.
    """
    exponents: tuple
    slots: tuple
    q_exponent: int = 0

    def __post_init__(self):
        if len(self.exponents) != len(self.slots):
            raise ValueError("exponents and slots must have equal length")
        if len(set(self.slots)) != len(self.slots):
            raise ValueError("slots must be distinct")
        if any(e == 0 or abs(e) > 64 for e in self.exponents):
            raise ValueError("exponents must be nonzero and at most 64")
        if self.q_exponent < 0:
            raise ValueError("q_exponent must be nonnegative")

    def cleared(self, g):
        """(plus, minus): exponent dicts on 0-based root indices, and the
        q-power attached to the minus side."""
        n = 2 * g
        plus, minus = {}, {}
        for e, s in zip(self.exponents, self.slots):
            if not 1 <= s <= n:
                raise ValueError(f"slot {s} outside 1..{n}")
            (plus if e > 0 else minus)[s - 1] = abs(e)
        return plus, minus, self.q_exponent

    def half_degree(self, g):
        """w with |expression| <= 2 q^w on the Weil circle."""
        plus, minus, qe = self.cleared(g)
        d_plus = sum(plus.values())
        d_minus = 2 * qe + sum(minus.values())
        return Fraction(max(d_plus, d_minus), 2)


def _canonical(mono, q_exp, g):
    """Monomial modulo the pairing relations mu_pair(i) = q / mu_i:
    reduce to a q-power and exponents on indices 0..g-1 only."""
    core = [0] * g
    qq = q_exp
    for idx, e in mono.items():
        if idx < g:
            core[idx] += e
        else:
            core[_pair(idx, g)] -= e
            qq += e
    return qq, tuple(core)


def relation_is_trivial(rel, g):
    """True when the cleared expression vanishes identically, i.e. the two
    monomials agree modulo the pairing alone."""
    plus, minus, qe = rel.cleared(g)
    return _canonical(plus, 0, g) == _canonical(minus, qe, g)


def weyl_group_elements(g):
    """All 2**g * g! signed permutations as index maps on {0..2g-1}
    commuting with the pairing i <-> 2g-1-i."""
    out = []
    for perm in itertools.permutations(range(g)):
        for signs in itertools.product((0, 1), repeat=g):
            sigma = [0] * (2 * g)
            for i in range(g):
                image = perm[i] if not signs[i] else _pair(perm[i], g)
                sigma[i] = image
                sigma[_pair(i, g)] = _pair(image, g)
            out.append(tuple(sigma))
    return out


_GROUP_CACHE = {}


def _group(g):
    if g not in _GROUP_CACHE:
        _GROUP_CACHE[g] = weyl_group_elements(g)
    return _GROUP_CACHE[g]


def _apriori_bound(q, w, group_order):
    """Integer upper bound (2 q^w)^group_order, w a half-integer."""
    num = (2 * q ** w.numerator) ** group_order
    if w.denominator == 1:
        return num
    # w half-integral: bound = 2^n * q^(w n); take ceiling of the square root
    val = 4 ** group_order * q ** (w * 2 * group_order).numerator
    r = isqrt(val)
    return r + 1


def _orbit_product(labeling, plus, minus, q_exp):
    """(product, error_bound, imag_bound) of the orbit product at the
    labeling's precision; the error bound is rigorous given the certified
    root enclosures (floating-point noise is enclosed by a final margin)."""
    roots, radii = labeling.roots, labeling.radii
    q = labeling.q
    rel_err = [r / (abs(z) - r) for z, r in zip(roots, radii)]
    qpow = mpfr(q) ** q_exp
    half = mpfr(1) / 2

    prod = mpc(1)
    err = mpfr(0)

    def monomial(vec, sigma):
        # relative error of the monomial is at most exp(s) - 1 <= 2s for
        # s = sum |e| * per-root relative error <= 1/2; the sum form never
        # underflows to zero the way a (1 + tiny)**e product would
        m = mpc(1)
        s = mpfr(0)
        for idx, e in vec.items():
            j = sigma[idx]
            m *= roots[j] ** e
            s += e * rel_err[j]
        if s > half:
            raise _EnclosureTooWide
        return m, 2 * s

    for sigma in _group(labeling.g):
        mp, rp = monomial(plus, sigma)
        mm, rm = monomial(minus, sigma)
        mm *= qpow
        v = mp - mm
        e_v = abs(mp) * rp + abs(mm) * rm
        err = err * (abs(v) + e_v) + abs(prod) * e_v
        prod *= v
    # blanket cover for the floating-point noise of the accumulation
    # itself, hundreds of bits below the working precision
    noise = (abs(prod) + err + 1) * mpfr(2) ** (-labeling.precision_bits + 64)
    return prod, err + noise, abs(prod.imag)


def _norm_at(labeling, rel, needed_bits):
    """Exact orbit-norm integer, escalating precision until the enclosure
    pins the value."""
    plus, minus, qe = rel.cleared(labeling.g)
    tol = mpfr(2) ** -_ROUNDING_TOLERANCE_BITS
    lab = labeling
    prec = max(labeling.precision_bits, needed_bits)
    while prec <= PRECISION_CAP:
        lab = lab.at_precision(prec)
        try:
            with gmpy2.context(precision=prec + 64):
                prod, err, imag = _orbit_product(lab, plus, minus, qe)
                nearest = gmpy2.rint(prod.real)
                residual = abs(prod.real - nearest)
                if imag <= err + tol / 4 and residual + err < tol:
                    return int(nearest), lab
        except _EnclosureTooWide:
            pass
        prec *= 2
    raise PrecisionExhausted(
        "orbit norm not certified within the precision cap")


def minimum_norm_precision(labeling, half_degree_weight=1):
    """Working precision (bits) every orbit-norm evaluation uses at least,
    whatever floor the labeling was requested at.  Relations of larger
    half-degree escalate even higher."""
    order = len(_group(labeling.g))
    bound = _apriori_bound(labeling.q, half_degree_weight, order)
    return bound.bit_length() + 96


def galois_orbit_norm(labeling, rel, precision_bits=None):
    """Exact integer norm prod_{sigma in group} sigma(expression) for a
    non-trivial relation; nonnegative because the orbit is closed under
    complex conjugation.

    Rejects relations that vanish identically under the pairing (they
    carry no information).  The result is checked against the a-priori
    bound (2 q^w)^{2^g g!}; exceeding it means corrupted labels.
    """
    g = labeling.g
    if relation_is_trivial(rel, g):
        raise ValueError(
            "relation vanishes identically under the pairing; no norm")
    w = rel.half_degree(g)
    order = len(_group(g))
    bound = _apriori_bound(labeling.q, w, order)
    needed = precision_bits or bound.bit_length() + 96
    value, _ = _norm_at(labeling, rel, needed)
    if abs(value) > bound:
        raise AssertionError(
            "orbit norm exceeds its a-priori bound; labels corrupt")
    return value


def f1_f2(labeling, indices):
    """The two nonzero exclusion integers attached to a tuple of six
    distinct root indices (1-based): the first is a sum of two quadruple
    norms (never both zero), the second a square-versus-product norm;
    both are bounded by powers of 2q.

    Returns (f1, f2) with 0 < f1 <= 2*(2q)^48 and 0 < f2 <= (2q)^48 for
    g = 3.
    """
    g = labeling.g
    idx = tuple(indices)
    if len(idx) != 6 or len(set(idx)) != 6:
        raise ValueError("need six distinct indices")
    if not all(1 <= i <= 2 * g for i in idx):
        raise ValueError(f"indices must lie in 1..{2 * g}")
    x = dict(enumerate(idx, start=1))    # slot -> root index (1-based)

    def norm_or_zero(a, b, c, d):
        # |N(mu_a mu_b - mu_c mu_d)|, with the identically-vanishing case
        # counting as exact zero
        rel = Relation((1, 1, -1, -1), (a, b, c, d))
        if relation_is_trivial(rel, g):
            return 0
        return abs(galois_orbit_norm(labeling, rel))

    f1 = norm_or_zero(x[1], x[3], x[2], x[4]) \
        + norm_or_zero(x[1], x[6], x[2], x[5])

    rel2 = Relation((2, -1, -1), (x[2], x[1], x[3]))
    f2 = 0 if relation_is_trivial(rel2, g) \
        else abs(galois_orbit_norm(labeling, rel2))

    if f1 == 0 or f2 == 0:
        raise StructuralRelationError(
            "exclusion integers vanish; the labeling cannot have the full "
            "signed permutation group")
    return f1, f2


# ------------------------------------------------------------------
# reports
# ------------------------------------------------------------------

@dataclass
class ExclusionReport:
    obstruction: str
    log_threshold: object            # mpfr, natural log of the l-threshold
    exact_integers: list
    small_primes: list
    cofactors: list
    details: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    applicable: bool = True

    def as_dict(self):
        return {
            "class": self.obstruction,
            "applicable": self.applicable,
            "threshold_ln": float(self.log_threshold)
            if self.log_threshold is not None else None,
            "integers": [str(n) for n in self.exact_integers],
            "small_primes": list(self.small_primes),
            "cofactors": [str(c) for c in self.cofactors],
            "notes": list(self.notes),
            "details": self.details,
        }


def _factor_into(integers, trial_bound):
    """(sorted prime list, cofactor list) covering every prime divisor of
    the given nonzero integers: primes up to the bound by trial division,
    anything left verbatim."""
    sieve = primes_up_to(trial_bound)
    primes = set()
    cofactors = []
    for n in integers:
        n = abs(n)
        if n <= 1:
            continue
        for p in sieve:
            if p * p > n:
                break
            if n % p == 0:
                primes.add(p)
                while n % p == 0:
                    n //= p
        if 1 < n <= trial_bound:
            primes.add(n)
        elif n > 1:
            cofactors.append(n)
    return sorted(primes), cofactors


def _log_threshold(q, w, order):
    """ln((2 q^w)^order) as mpfr."""
    with gmpy2.context(precision=128):
        return order * (gmpy2.log(mpfr(2)) + w * gmpy2.log(mpfr(q)))


# ------------------------------------------------------------------
# tensor-decomposition certificates
# ------------------------------------------------------------------

def _tensor_binomials(m, n):
    """Defining binomials of the tensor-structure variety for (m, n), as
    pairs of coordinate-index multisets.  Coordinates are numbered
    z_1..z_{2m}, then x_{ij}, then y_{ij} (j = 1..(n-1)/2, i = 1..2m),
    0-based."""
    half = (n - 1) // 2
    z = list(range(2 * m))
    x = [[2 * m + j * 2 * m + i for i in range(2 * m)] for j in range(half)]
    y = [[2 * m * (1 + half) + j * 2 * m + i for i in range(2 * m)]
         for j in range(half)]
    binomials = []
    for j in range(half):
        for i in range(2 * m):
            binomials.append(((x[j][i], y[j][i]), (z[i], z[i])))
        for i in range(2 * m):
            for k in range(i + 1, 2 * m):
                binomials.append(((z[k], x[j][i]), (z[i], x[j][k])))
                binomials.append(((z[k], y[j][i]), (z[i], y[j][k])))
    return binomials


def _coset_representatives(g):
    """One representative per left coset W sigma of the signed group in
    S_{2g}; the per-assignment data below is constant on cosets."""
    group = _group(g)
    seen = set()
    reps = []
    for sigma in itertools.permutations(range(2 * g)):
        key = min(tuple(w[sigma[i]] for i in range(2 * g)) for w in group)
        if key not in seen:
            seen.add(key)
            reps.append(sigma)
    return reps


def _monomial_difference_relation(plus_indices, minus_indices):
    """Relation for prod mu_{plus} - prod mu_{minus}, 0-based index
    multisets with disjoint supports (repeats become exponents)."""
    exps = {}
    for i in plus_indices:
        exps[i] = exps.get(i, 0) + 1
    for i in minus_indices:
        exps[i] = exps.get(i, 0) - 1
    slots = tuple(sorted(exps))
    return Relation(tuple(exps[s] for s in slots),
                    tuple(s + 1 for s in slots))


def _pair_relation(labeling, a, b, c, d):
    """|N(mu_a mu_b - mu_c mu_d)| on 0-based indices (a, b and c, d need
    not be distinct within a side), or None when the difference vanishes
    identically."""
    rel = _monomial_difference_relation((a, b), (c, d))
    if relation_is_trivial(rel, labeling.g):
        return None
    return abs(galois_orbit_norm(labeling, rel))


def tensor_exclusion(labeling, m=1, n=3, trial_bound=None):
    """Certificate that the mod-l image is not contained in a tensor
    product subgroup of shape (2m) x (n), for all l outside an explicit
    finite set.

    For each assignment sigma of the roots to the 2g coordinates of the
    tensor-structure variety (one representative per signed-group coset),
    every defining binomial must vanish mod l if Frobenius mod l is
    tensor-decomposed, so l divides the gcd G_sigma of the binomial orbit
    norms.  Identically-vanishing binomials are excluded from the gcd;
    G_sigma = 0 (all binomials vanishing on the actual roots) cannot
    happen for a certified labeling and raises StructuralRelationError.
    """
    g = labeling.g
    if n % 2 == 0 or n < 3 or m < 1 or 2 * m * n != 2 * g:
        raise ValueError(
            f"no admissible tensor shape (m={m}, n={n}) for dimension {g}")
    settings = resolve_settings(trial_division_bound=trial_bound)
    binomials = _tensor_binomials(m, n)
    per_sigma = []
    for sigma in _coset_representatives(g):
        values = []
        for (mono_a, mono_b) in binomials:
            a, b = mono_a
            c, d = mono_b
            v = _pair_relation(labeling, sigma[a], sigma[b],
                               sigma[c], sigma[d])
            if v is not None:
                values.append(v)
        if not values:
            raise StructuralRelationError(
                "every defining binomial vanishes identically for an "
                "assignment; labeling is structurally tensor-decomposed")
        G = 0
        for v in values:
            G = gcd(G, v)
        if G == 0:
            raise StructuralRelationError(
                "all binomial norms vanish for an assignment: the roots "
                "themselves satisfy the tensor structure")
        per_sigma.append((sigma, G))

    gcds = [G for _, G in per_sigma]
    primes, cofactors = _factor_into(gcds, settings.trial_division_bound)
    return ExclusionReport(
        obstruction=f"tensor-product ({2 * m} x {n})",
        log_threshold=_log_threshold(labeling.q, 1, len(_group(g))),
        exact_integers=gcds,
        small_primes=primes,
        cofactors=cofactors,
        details={"assignments": [
            {"sigma": list(s), "gcd": str(G)} for s, G in per_sigma]},
        notes=["binomial generating set: displayed defining equations of "
               "the tensor-structure variety",
               "gcd convention: gcd(0, n) = |n|; identically-vanishing "
               "binomials excluded"],
    )


# ------------------------------------------------------------------
# Lie-type / small-socle certificates
# ------------------------------------------------------------------

def _resultant_with_power_relation(f, q, M, qpow):
    """|Res(f, x^M - q^qpow)| — zero iff some root satisfies mu^M = q^qpow."""
    probe = [-(q ** qpow)] + [0] * (M - 1) + [1]
    return abs(poly_resultant(f, probe))


def lie_exclusion(labeling, trial_bound=None):
    """Certificate against small Lie-type socles (rank-1 weight structure)
    for the mod-l image, in two layers.

    Squares layer: the relation "middle eigenvalue squared equals the
    product of its neighbours" taken over the orbit-representative index
    triples, plus the exact resultant covering the paired pattern.

    Weight layer: for each r up to floor(sqrt(6g)), the relation
    mu_b^{8(r+1)} = (mu_a mu_c)^{4(r+1)} over representative triples, with
    the paired pattern again an exact resultant.  Thresholds are attached
    per layer; every integer must be nonzero for a certified labeling.
    """
    g = labeling.g
    if g < 3:
        raise ValueError("Lie-socle certificates require dimension >= 3")
    settings = resolve_settings(trial_division_bound=trial_bound)
    f = list(labeling.f)
    q = labeling.q
    order = len(_group(g))
    pair1 = _pair(0, g) + 1              # 1-based partner of index 1

    integers = []
    details = {}

    # squares layer: mu_2^2 = mu_1 mu_3 patterns
    sq_generic = abs(galois_orbit_norm(
        labeling, Relation((2, -1, -1), (2, 1, 3))))
    sq_adjacent = abs(galois_orbit_norm(
        labeling, Relation((2, -1, -1), (pair1, 1, 2))))
    sq_resultant = _resultant_with_power_relation(f, q, 2, 1)
    squares = {"generic": sq_generic, "adjacent_pair": sq_adjacent,
               "fixed_pair_resultant": sq_resultant}
    if 0 in squares.values():
        raise StructuralRelationError(
            "square-relation norm vanishes; socle certificate impossible")
    integers.extend(squares.values())
    details["squares"] = {k: str(v) for k, v in squares.items()}
    details["squares_threshold_ln"] = float(_log_threshold(q, 1, order))

    # weight layer: mu_b^{8(r+1)} = (mu_a mu_c)^{4(r+1)}
    r_max = isqrt(6 * g)
    weights = {}
    for r in range(1, r_max + 1):
        a = 4 * (r + 1)
        generic = abs(galois_orbit_norm(
            labeling, Relation((2 * a, -a, -a), (2, 1, 3))))
        adjacent = abs(galois_orbit_norm(
            labeling, Relation((2 * a, -a, -a), (pair1, 1, 2))))
        res = _resultant_with_power_relation(f, q, 2 * a, a)
        if generic == 0 or adjacent == 0 or res == 0:
            raise StructuralRelationError(
                f"weight relation at r={r} vanishes exactly")
        weights[r] = {"generic": generic, "adjacent_pair": adjacent,
                      "fixed_pair_resultant": res}
        integers.extend(weights[r].values())
    details["weights"] = {
        r: {k: str(v) for k, v in d.items()} for r, d in weights.items()}

    with gmpy2.context(precision=128):
        log_thr = order * (gmpy2.log(mpfr(2))
                           + 4 * (gmpy2.sqrt(mpfr(6 * g)) + 1)
                           * gmpy2.log(mpfr(q)))
    primes, cofactors = _factor_into(integers, settings.trial_division_bound)
    return ExclusionReport(
        obstruction="small-Lie-socle",
        log_threshold=log_thr,
        exact_integers=integers,
        small_primes=primes,
        cofactors=cofactors,
        details=details,
        notes=[f"weight layer covers r = 1..{r_max}",
               "paired patterns handled by exact resultants"],
    )


# ------------------------------------------------------------------
# minuscule-weight certificates
# ------------------------------------------------------------------

def _split_orbit_representatives(g, n):
    """Representatives of the signed-group orbits of unordered pairs of
    disjoint n-element index sets (sides are interchangeable), dropping
    pairs whose product relation vanishes identically."""
    group = _group(g)
    indices = range(2 * g)
    seen = set()
    reps = []
    for left in itertools.combinations(indices, n):
        rest = [i for i in indices if i not in left]
        for right in itertools.combinations(rest, n):
            if min(left) > min(right):
                continue
            key = min(
                min(tuple(sorted(w[i] for i in left))
                    + tuple(sorted(w[i] for i in right)),
                    tuple(sorted(w[i] for i in right))
                    + tuple(sorted(w[i] for i in left)))
                for w in group)
            if key in seen:
                continue
            seen.add(key)
            reps.append((left, right))
    return reps


def minuscule_exclusion(labeling, n_odd, N, trial_bound=None):
    """Certificate from the minuscule-weight sum identity: for an n-fold
    product identity with n odd (2n <= 2g) and outer-twist exponent
    N <= 64, the relation prod_{left} mu^N = prod_{right} mu^N over
    disjoint injective index sides must fail in characteristic zero, and
    its norms collect the primes where it could hold mod l.
    """
    g = labeling.g
    if n_odd % 2 == 0 or n_odd < 1:
        raise ValueError("the product length must be odd")
    if 2 * n_odd > 2 * g:
        raise ValueError("the identity needs 2n distinct eigenvalues")
    if not 1 <= N <= 64:
        raise ValueError("outer exponent must lie in 1..64")
    settings = resolve_settings(trial_division_bound=trial_bound)
    q = labeling.q
    order = len(_group(g))

    integers = []
    per_rep = []
    for left, right in _split_orbit_representatives(g, n_odd):
        slots = tuple(i + 1 for i in left) + tuple(i + 1 for i in right)
        exps = (N,) * n_odd + (-N,) * n_odd
        rel = Relation(exps, slots)
        if relation_is_trivial(rel, g):
            per_rep.append({"left": list(left), "right": list(right),
                            "norm": "identically zero (excluded)"})
            continue
        v = abs(galois_orbit_norm(labeling, rel))
        if v == 0:
            raise StructuralRelationError(
                "product identity holds exactly on the labeled roots")
        integers.append(v)
        per_rep.append({"left": list(left), "right": list(right),
                        "norm": str(v)})
    if not integers:
        raise StructuralRelationError(
            "every side split vanishes identically; labeling degenerate")

    primes, cofactors = _factor_into(integers, settings.trial_division_bound)
    return ExclusionReport(
        obstruction=f"minuscule-weight (n={n_odd}, N={N})",
        log_threshold=_log_threshold(q, Fraction(n_odd * N, 2), order),
        exact_integers=integers,
        small_primes=primes,
        cofactors=cofactors,
        details={"assignments": per_rep},
    )


# ------------------------------------------------------------------
# tensor-induced certificates
# ------------------------------------------------------------------

def _landau_max_order(n):
    """Largest lcm of a partition of n (largest element order in the
    symmetric group on n letters), by direct search; n is tiny here."""
    best = 1

    def rec(remaining, cap, acc):
        nonlocal best
        best = max(best, acc)
        for part in range(min(cap, remaining), 1, -1):
            rec(remaining - part, part, lcm(acc, part))

    rec(n, n, 1)
    return best


def _quadruple_representatives(g):
    """Signed-orbit representatives of ordered quadruples (a, b, c, d) of
    distinct indices where neither {a,b} nor {c,d} is a conjugate pair,
    up to the symmetries fixing |N((mu_a mu_b)^e - (mu_c mu_d)^e)|."""
    group = _group(g)
    seen = set()
    reps = []
    for quad in itertools.permutations(range(2 * g), 4):
        a, b, c, d = quad
        if b == _pair(a, g) or d == _pair(c, g):
            continue
        variants = []
        for w in group:
            ia, ib, ic, id_ = w[a], w[b], w[c], w[d]
            for (u, v), (s, t) in (((ia, ib), (ic, id_)),
                                   ((ic, id_), (ia, ib))):
                variants.append((tuple(sorted((u, v))), tuple(sorted((s, t)))))
        key = min(variants)
        if key in seen:
            continue
        seen.add(key)
        reps.append(quad)
    return reps


def induced_exclusion(labeling, trial_bound=None):
    """Certificate against tensor-induced decompositions: applicable only
    when 2g = (2m)^t for some t >= 3, in which case the obstruction forces
    (mu_a mu_b)^e = (mu_c mu_d)^e for some exponent e up to the largest
    permutation order on t letters.  For inapplicable dimensions the
    report is empty (the obstruction class is vacuous)."""
    g = labeling.g
    settings = resolve_settings(trial_division_bound=trial_bound)
    shapes = []
    two_g = 2 * g
    t = 3
    while 2 ** t <= two_g:
        root = round(two_g ** (1.0 / t))
        for cand in (root - 1, root, root + 1):
            if cand >= 2 and cand % 2 == 0 and cand ** t == two_g:
                shapes.append((cand // 2, t))
        t += 1
    if not shapes:
        return ExclusionReport(
            obstruction="tensor-induced",
            log_threshold=None,
            exact_integers=[],
            small_primes=[],
            cofactors=[],
            applicable=False,
            notes=[f"vacuous: 2g = {two_g} is not a t-th power of an even "
                   "number with t >= 3"],
        )

    e_max = max(_landau_max_order(t) for _, t in shapes)
    integers = []
    per_rep = {}
    for e in range(1, e_max + 1):
        vals = []
        for (a, b, c, d) in _quadruple_representatives(g):
            rel = Relation((e, e, -e, -e), (a + 1, b + 1, c + 1, d + 1))
            if relation_is_trivial(rel, g):
                continue
            v = abs(galois_orbit_norm(labeling, rel))
            if v == 0:
                raise StructuralRelationError(
                    "induced-pattern relation holds exactly")
            vals.append(v)
        integers.extend(vals)
        per_rep[e] = [str(v) for v in vals]

    primes, cofactors = _factor_into(integers, settings.trial_division_bound)
    return ExclusionReport(
        obstruction="tensor-induced",
        log_threshold=_log_threshold(labeling.q, Fraction(e_max),
                                     len(_group(g))),
        exact_integers=integers,
        small_primes=primes,
        cofactors=cofactors,
        details={"shapes": [{"factor_dim": 2 * m, "tensor_depth": t}
                            for m, t in shapes],
                 "per_exponent": per_rep},
        notes=[f"exponents up to the largest permutation order "
               f"{e_max} on the tensor-depth letters"],
    )


# ------------------------------------------------------------------
# weight-identity verification for the minuscule families
# ------------------------------------------------------------------

def _weight_tuples():
    """The six weight vectors, per family, realizing the 3 + 3 sum
    identity in the orthonormal-coordinate presentation."""
    half = Fraction(1, 2)

    def a5():
        # valid weights: permutations of (1,1,1,-1/2,-1/2,-1/2)
        rows = [
            (-half, 1, 1, 1, -half, -half),
            (1, -half, 1, -half, 1, -half),
            (1, 1, -half, -half, -half, 1),
            (1, 1, -half, 1, -half, -half),
            (-half, 1, 1, -half, 1, -half),
            (1, -half, 1, -half, -half, 1),
        ]
        valid = all(sorted(r) == [-half] * 3 + [1] * 3 for r in rows)
        return rows, valid

    def b5():
        minus_positions = [(), (0, 1, 2, 3, 4), (4,), (1, 3), (2, 4), (0, 4)]
        rows = [tuple(-half if i in pos else half for i in range(5))
                for pos in minus_positions]
        return rows, True         # every sign pattern is a weight

    def d6():
        minus_positions = [(), (0, 1, 2, 4), (3, 5), (0, 1), (2, 3), (4, 5)]
        rows = [tuple(-half if i in pos else half for i in range(6))
                for pos in minus_positions]
        valid = all(len(pos) % 2 == 0 for pos in minus_positions)
        return rows, valid

    def e7():
        rows, valid = d6()
        return [r + (0, 0) for r in rows], valid

    return {"A5": a5(), "B5": b5(), "D6": d6(), "E7": e7()}


def verify_weight_identities():
    """Check, for each minuscule family at its smallest admissible rank,
    that the six displayed weight vectors are pairwise distinct, valid
    weights of the representation, and satisfy
    lambda_1 + lambda_2 + lambda_3 = lambda_4 + lambda_5 + lambda_6.

    Returns {family: {"identity": bool, "distinct": bool, "valid": bool}}.
    """
    out = {}
    for name, (rows, valid) in _weight_tuples().items():
        left = tuple(sum(r[i] for r in rows[:3]) for i in range(len(rows[0])))
        right = tuple(sum(r[i] for r in rows[3:]) for i in range(len(rows[0])))
        out[name] = {
            "identity": left == right,
            "distinct": len(set(rows)) == 6,
            "valid": valid,
        }
    return out
