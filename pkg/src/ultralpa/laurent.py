"""Laurent polynomials over Q or GF(p), with exact irreducibility testing.

A Laurent polynomial is stored as a finitely supported map from integer
exponents to nonzero field elements.  Construction normalizes by the unit
group of K[x, x^-1]: exponents are shifted so the constant term is nonzero,
and the result is scaled to be monic over GF(p), or integer, primitive and
with positive leading coefficient over Q.  Two associate polynomials are
therefore structurally equal.

Units of K[x, x^-1] are the monomials c*x^k; they normalize to 1.  A
normalized polynomial with nonzero constant term is irreducible in the
Laurent ring exactly when it is irreducible in K[x], which is decided by
trial division over GF(p) and by Kronecker's interpolation method over Q.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import ParameterError
from .fields import QQ, Field, PrimeField


class LaurentPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        """Normalize ``coeffs`` (an exponent -> coefficient map) over ``field``."""
        cleaned = {}
        for e, c in dict(coeffs).items():
            c = field.of(c)
            if c != field.zero:
                cleaned[int(e)] = c
        if cleaned:
            shift = min(cleaned)
            cleaned = {e - shift: c for e, c in cleaned.items()}
            cleaned = _scale_canonical(field, cleaned)
        self.field = field
        self.coeffs = tuple(sorted(cleaned.items()))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        # degree of the normalized representative; -1 for the zero polynomial
        return self.coeffs[-1][0] if self.coeffs else -1

    @property
    def is_unit(self) -> bool:
        return len(self.coeffs) == 1  # normalized units are the constant 1

    def dense(self):
        out = [self.field.zero] * (self.degree + 1)
        for e, c in self.coeffs:
            out[e] = c
        return out

    def as_dict(self):
        return dict(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        terms = []
        for e, c in reversed(self.coeffs):
            if e == 0:
                terms.append(f"{c}")
            elif e == 1:
                terms.append(f"{c}*x" if c != self.field.one else "x")
            else:
                terms.append(f"{c}*x^{e}" if c != self.field.one else f"x^{e}")
        return " + ".join(terms)


def _scale_canonical(field, coeffs):
    lead = coeffs[max(coeffs)]
    if isinstance(field, PrimeField):
        # monic convention
        s = field.inv(lead)
        return {e: field.mul(c, s) for e, c in coeffs.items()}
    # over Q: clear denominators, divide out content, make the lead positive
    denom = 1
    for c in coeffs.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = {e: int(c * denom) for e, c in coeffs.items()}
    content = 0
    for c in ints.values():
        content = gcd(content, abs(c))
    sign = -1 if ints[max(ints)] < 0 else 1
    return {e: Fraction(c // (sign * content)) for e, c in ints.items()}


def poly(field, coeffs) -> LaurentPoly:
    return LaurentPoly(field, coeffs)


# -- classical (non-Laurent) helper arithmetic on dense coefficient lists --


def _trim(dense, field):
    while dense and dense[-1] == field.zero:
        dense.pop()
    return dense


def _mul_dense(a, b, field):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == field.zero:
            continue
        for j, cb in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return _trim(out, field)


def _divmod_dense(a, b, field):
    a = list(a)
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = field.mul(a[i + len(b) - 1], inv_lead)
        if c != field.zero:
            q[i] = c
            for j, cb in enumerate(b):
                a[i + j] = field.sub(a[i + j], field.mul(c, cb))
    return q, _trim(a, field)


def _monic_polys(p, degree):
    # all monic coefficient lists of the given degree over GF(p)
    for lower in itertools.product(range(p), repeat=degree):
        yield list(lower) + [1]


def _eval_int(dense, x):
    acc = Fraction(0)
    for c in reversed(dense):
        acc = acc * x + c
    return acc


def _divisors(n):
    n = abs(int(n))
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    ds = set(small) | {n // d for d in small}
    return sorted(ds | {-d for d in ds})


def _lagrange(points):
    """Interpolating polynomial (dense, Fractions) through (x, y) pairs."""
    out = [Fraction(0)]
    for i, (xi, yi) in enumerate(points):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            num = _mul_dense(num, [Fraction(-xj), Fraction(1)], QQ)
            den *= xi - xj
        scale = yi / den
        term = [c * scale for c in num]
        out = [QQ.add(a, b) for a, b in itertools.zip_longest(out, term, fillvalue=Fraction(0))]
    return _trim(out, QQ)


def _irreducible_mod_p(f: LaurentPoly) -> bool:
    field = f.field
    dense = f.dense()
    d = f.degree
    for k in range(1, d // 2 + 1):
        for g in _monic_polys(field.p, k):
            _, rem = _divmod_dense(dense, g, field)
            if not rem:
                return False
    return True


def _irreducible_over_q(f: LaurentPoly) -> bool:
    dense = f.dense()
    d = f.degree
    # interpolation points 0, 1, -1, 2, -2, ...
    points = [0]
    for i in range(1, d + 2):
        points.extend([i, -i])
    for k in range(1, d // 2 + 1):
        xs, ys = [], []
        for x in points:
            v = _eval_int(dense, x)
            if v == 0:
                return False  # rational root, so a linear factor splits off
            xs.append(x)
            ys.append(v)
            if len(xs) == k + 1:
                break
        for combo in itertools.product(*[_divisors(v) for v in ys]):
            g = _lagrange(list(zip(xs, [Fraction(c) for c in combo])))
            if len(g) - 1 != k:
                continue  # lower-degree candidates are covered at their own k
            if any(c.denominator != 1 for c in g):
                continue  # a factor of a primitive integer polynomial is integral
            _, rem = _divmod_dense(dense, g, QQ)
            if not rem:
                return False
    return True


def is_irreducible(f: LaurentPoly) -> bool:
    """Decide irreducibility in the Laurent ring K[x, x^-1].

    Units (monomials c*x^k) are not irreducible.  The zero polynomial is
    rejected outright.
    """
    if f.is_zero:
        raise ParameterError("the zero polynomial is neither a unit nor irreducible")
    if f.degree == 0:
        return False
    if f.degree == 1:
        return True
    if isinstance(f.field, PrimeField):
        return _irreducible_mod_p(f)
    return _irreducible_over_q(f)
