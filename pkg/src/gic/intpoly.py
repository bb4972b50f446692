"""Exact arithmetic on dense integer polynomials.

Polynomials are sequences of Python ints, constant term first, so
``[3, 0, 1]`` is ``x**2 + 3``.  Degrees in this package never exceed a few
dozen, so everything is dense and quadratic-time algorithms are fine; what
matters is that every result here is an exact integer (or an exact integer
polynomial), with no floating point anywhere.

The only über-convention to remember: ``degree([]) == degree([0]) == -1``.
"""

from fractions import Fraction

__all__ = [
    "degree", "trim", "poly_add", "poly_sub", "poly_neg", "poly_mul",
    "poly_scale", "poly_eval", "derivative", "poly_resultant",
    "poly_discriminant", "is_squarefree", "poly_gcd_rational",
    "reciprocal_transform", "functional_equation_holds", "real_weil_poly",
    "expand_trace_form",
]


def degree(f):
    """Degree of ``f``; the zero polynomial has degree -1."""
    d = len(f) - 1
    while d >= 0 and f[d] == 0:
        d -= 1
    return d


def trim(f):
    """Drop trailing zero coefficients (the zero polynomial becomes ``[]``)."""
    d = degree(f)
    return list(f[: d + 1])


def poly_add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                 for i in range(n)])


def poly_sub(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)
                 for i in range(n)])


def poly_neg(f):
    return [-c for c in f]


def poly_scale(f, c):
    return trim([c * a for a in f])


def poly_mul(f, g):
    """Product of two integer polynomials.

    Examples
    ========

    >>> poly_mul([1, 1], [-1, 1])   # (x+1)(x-1)
    [-1, 0, 1]
    """
    if degree(f) < 0 or degree(g) < 0:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return trim(out)


def poly_eval(f, x):
    """Evaluate by Horner's rule; exact for int or Fraction arguments."""
    acc = 0
    for c in reversed(trim(f)):
        acc = acc * x + c
    return acc


def derivative(f):
    return trim([i * f[i] for i in range(1, len(f))])


# ------------------------------------------------------------------
# resultant / discriminant
# ------------------------------------------------------------------

def _bareiss_det(m):
    """Exact determinant of a square integer matrix (fraction-free
    elimination with row pivoting; all intermediate divisions are exact)."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def poly_resultant(f, g):
    """Resultant of two integer polynomials, as the determinant of their
    Sylvester matrix.  Zero exactly when ``f`` and ``g`` share a root over
    the algebraic closure.

    Examples
    ========

    >>> poly_resultant([-3, 1], [1, 0, 1])   # Res(x-3, x^2+1) = 3^2+1
    10
    >>> poly_resultant([1, 0, 1], [1, 0, 1])
    0
    >>> poly_resultant([0, 0, 1], [-2, 1])   # Res(x^2, x-2)
    4
    """
    f = trim(f)
    g = trim(g)
    m = degree(f)
    n = degree(g)
    if m < 0 and n < 0:
        raise ValueError("resultant of two zero polynomials is undefined")
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    frow = list(reversed(f))          # leading coefficient first
    grow = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + frow + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + grow + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def poly_discriminant(f):
    """Discriminant with the sign convention
    ``disc(f) = (-1)**(d*(d-1)//2) * Res(f, f') / lc(f)``, ``d = deg f``.

    Examples
    ========

    >>> poly_discriminant([2, -1, 1])    # x^2 - x + 2 -> b^2 - 4c
    -7
    >>> poly_discriminant([0, 0, 1])     # x^2, repeated root
    0
    """
    f = trim(f)
    d = degree(f)
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = poly_resultant(f, derivative(f))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    quot, rem = divmod(sign * res, f[-1])
    assert rem == 0, "resultant not divisible by leading coefficient"
    return quot


def is_squarefree(f):
    """True when ``f`` has no repeated complex root (degree >= 1)."""
    return poly_discriminant(f) != 0


def poly_gcd_rational(f, g):
    """Monic-over-Q gcd of two integer polynomials, returned as a primitive
    integer polynomial with positive leading coefficient.  Exact (Fraction
    Euclid); intended for squarefree-part extraction, not for speed."""
    a = [Fraction(c) for c in trim(f)]
    b = [Fraction(c) for c in trim(g)]
    while b:
        # a mod b
        while len(a) >= len(b) and a:
            q = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] -= q * c
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return []
    from math import gcd, lcm
    denom = lcm(*[c.denominator for c in a]) if len(a) > 1 else a[0].denominator
    ints = [int(c * denom) for c in a]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


# ------------------------------------------------------------------
# reciprocal transform and the trace-polynomial change of variables
# ------------------------------------------------------------------

def reciprocal_transform(phi, q):
    """The root map ``mu -> q/mu`` on polynomials:
    ``phi*(x) = x**d * phi(q/x) / phi(0)``.

    An involution on admissible inputs; monic stays monic whenever the
    coefficient divisions are exact.  Rejects ``phi(0) == 0`` and non-exact
    divisions (over a field use the modular variant instead).

    Examples
    ========

    >>> reciprocal_transform([2, 0, 1], 2)    # x^2+2 is self-paired
    [2, 0, 1]
    >>> reciprocal_transform([-1, 1], 2)      # root 1 -> 2/1
    [-2, 1]
    """
    phi = trim(phi)
    d = degree(phi)
    if d < 0 or phi[0] == 0:
        raise ValueError("reciprocal transform needs a nonzero constant term")
    out = []
    for j in range(d + 1):
        num = phi[d - j] * q ** (d - j)
        quot, rem = divmod(num, phi[0])
        if rem != 0:
            raise ValueError(
                "reciprocal transform is not integral for this polynomial")
        out.append(quot)
    return trim(out)


def functional_equation_holds(f, q):
    """Exact check of ``x**(2g) * f(q/x) == q**g * f(x)`` for a monic
    degree-2g polynomial, i.e. coefficient identities
    ``a_{g-t} == q**t * a_{g+t}``."""
    f = trim(f)
    d = degree(f)
    if d < 0 or d % 2 != 0:
        return False
    g = d // 2
    return all(f[g - t] == q ** t * f[g + t] for t in range(1, g + 1))


def expand_trace_form(h, q):
    """Expand ``x**g * h(x + q/x)`` back into a degree-2g polynomial; the
    exact inverse of :func:`real_weil_poly`."""
    h = trim(h)
    g = degree(h)
    out = []
    for k in range(g + 1):
        if h[k] == 0:
            continue
        term = [0] * (g - k) + [1]            # x**(g-k)
        base = [q, 0, 1]                      # x**2 + q
        for _ in range(k):
            term = poly_mul(term, base)
        out = poly_add(out, poly_scale(term, h[k]))
    return out


def real_weil_poly(f, q):
    """The monic degree-g polynomial ``h`` with ``f(x) = x**g * h(x + q/x)``.

    Solving for ``h`` top-down is also an exact functional-equation check:
    the change of variables exists precisely for polynomials satisfying
    ``x**(2g) f(q/x) = q**g f(x)``, and any residue left after matching
    coefficients means ``f`` is not of that shape.

    Examples
    ========

    >>> real_weil_poly([3, -1, 1], 3)    # x^2 - x + 3
    [-1, 1]
    >>> real_weil_poly([2, 0, 1], 2)     # zero trace
    [0, 1]
    """
    f = trim(f)
    d = degree(f)
    if d < 0 or d % 2 != 0:
        raise ValueError("need even degree")
    g = d // 2
    residual = list(f) + [0] * (2 * g + 1 - len(f))
    h = [0] * (g + 1)
    for k in range(g, -1, -1):
        c = residual[g + k]
        h[k] = c
        if c == 0:
            continue
        term = [0] * (g - k) + [1]
        base = [q, 0, 1]
        for _ in range(k):
            term = poly_mul(term, base)
        for i, t in enumerate(term):
            residual[i] -= c * t
    if any(residual):
        raise ValueError(
            "polynomial does not satisfy the q-symmetric functional equation")
    return trim(h)
