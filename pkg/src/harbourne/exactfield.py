"""Exact field arithmetic: the rationals and simple number fields.

A number field is presented as Q[theta]/(m) for a monic polynomial m
with rational coefficients; elements are coefficient vectors of length
deg(m) and all arithmetic reduces modulo m.  Equality is coefficient-wise
after reduction, so it is decidable, which is the whole point: geometric
predicates downstream never touch floating point.

Irreducibility of m is the caller's responsibility; it is sanity-checked
for rational roots, which is a complete check up to degree 3.

Root extraction for univariate polynomials over the field is provided in
:func:`roots_in_field`.  Over Q it is plain rational-root extraction.
Over a number field it is a norm/shift argument: shift x by integer
multiples of theta until the norm (a resultant down to Q[x]) is
square-free, factor the norm over Q, and read off the in-field roots as
the linear gcds.  The rational-field legwork (resultants, factoring) is
delegated to sympy; everything in K[x] is done here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .profiles import HarbourneError

Rat = Fraction


class FieldError(HarbourneError):
    """Structural problem with a field or a cross-field operation."""


# ---------------------------------------------------------------------------
# dense polynomial helpers over Fraction (low -> high coefficients)


def _pstrip(p: list[Rat]) -> list[Rat]:
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(a: Sequence[Rat], b: Sequence[Rat]) -> list[Rat]:
    if not a or not b:
        return []
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _pstrip(out)


def _pdivmod(a: Sequence[Rat], b: Sequence[Rat]) -> tuple[list[Rat], list[Rat]]:
    b = _pstrip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Rat(0)] * max(0, len(rem) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(_pstrip(rem)) >= len(b):
        rem = _pstrip(rem)
        shift = len(rem) - len(b)
        factor = rem[-1] * inv_lead
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] -= factor * bi
    return _pstrip(quot), _pstrip(rem)


def _pxgcd(a: Sequence[Rat], b: Sequence[Rat]) -> tuple[list[Rat], list[Rat], list[Rat]]:
    """Extended Euclid: (g, u, v) with u*a + v*b = g."""
    r0, r1 = _pstrip(list(a)), _pstrip(list(b))
    u0, u1 = [Rat(1)], []
    v0, v1 = [], [Rat(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _pstrip([x - y for x, y in _zippad(u0, _pmul(q, u1))])
        v0, v1 = v1, _pstrip([x - y for x, y in _zippad(v0, _pmul(q, v1))])
    return r0, u0, v0


def _zippad(a: Sequence[Rat], b: Sequence[Rat]) -> Iterable[tuple[Rat, Rat]]:
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else Rat(0), b[i] if i < len(b) else Rat(0))


def _has_rational_root(monic: Sequence[Rat]) -> bool:
    # Clear denominators: integer polynomial with the same rational roots.
    den = 1
    for c in monic:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in monic]
    if ints[0] == 0:
        return True  # root at 0
    lead, const = abs(ints[-1]), abs(ints[0])
    for p in _divisors(const):
        for q in _divisors(lead):
            if gcd(p, q) != 1:
                continue
            for cand in (Rat(p, q), Rat(-p, q)):
                acc = Rat(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


# ---------------------------------------------------------------------------
# fields and elements


@dataclass(frozen=True)
class ExactField:
    """The rationals (min_poly None) or Q[theta]/(min_poly).

    ``min_poly`` is monic, low-to-high, leading coefficient included.
    """

    min_poly: tuple[Rat, ...] | None = None

    def __post_init__(self):
        if self.min_poly is None:
            return
        coeffs = tuple(Rat(c) for c in self.min_poly)
        object.__setattr__(self, "min_poly", coeffs)
        if len(coeffs) < 3:
            raise FieldError(
                "min_poly must have degree >= 2; use RATIONALS for degree 1"
            )
        if coeffs[-1] != 1:
            raise FieldError("min_poly must be monic")
        if _has_rational_root(coeffs):
            raise FieldError("min_poly has a rational root, hence is reducible")

    @property
    def degree(self) -> int:
        return 1 if self.min_poly is None else len(self.min_poly) - 1

    @property
    def is_rational(self) -> bool:
        return self.min_poly is None

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction or coefficient sequence into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (int, Fraction)):
            coeffs = [Rat(value)] + [Rat(0)] * (self.degree - 1)
            return FieldElement(self, tuple(coeffs))
        coeffs = [Rat(c) for c in value]
        if self.is_rational and len(coeffs) > 1:
            raise FieldError("coefficient vectors need a number field")
        if len(coeffs) > self.degree:
            coeffs = self._reduce(coeffs)
        coeffs += [Rat(0)] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def generator(self) -> "FieldElement":
        if self.is_rational:
            raise FieldError("the rationals have no generator")
        return self.element([0, 1])

    def _reduce(self, coeffs: list[Rat]) -> list[Rat]:
        _, rem = _pdivmod(coeffs, list(self.min_poly))
        return rem

    def label(self) -> str:
        if self.is_rational:
            return "Q"
        return "Q[theta]/(" + _poly_str(self.min_poly, "theta") + ")"


RATIONALS = ExactField()


def _poly_str(coeffs: Sequence[Rat], var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FieldElement:
    field: ExactField
    coeffs: tuple[Rat, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("cannot mix elements of different fields")
            return other
        return self.field.element(other)

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.field.is_rational:
            return FieldElement(self.field, (self.coeffs[0] * o.coeffs[0],))
        prod = _pmul(self.coeffs, o.coeffs)
        red = self.field._reduce(prod)
        red += [Rat(0)] * (self.field.degree - len(red))
        return FieldElement(self.field, tuple(red))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.field.is_rational:
            return FieldElement(self.field, (1 / self.coeffs[0],))
        g, u, _ = _pxgcd(list(self.coeffs), list(self.field.min_poly))
        if len(g) != 1:
            raise FieldError(
                "element is a zero divisor: min_poly is not irreducible"
            )
        scaled = [c / g[0] for c in u]
        red = self.field._reduce(scaled)
        red += [Rat(0)] * (self.field.degree - len(red))
        return FieldElement(self.field, tuple(red))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def as_rational(self) -> Rat:
        """The value as a Fraction; only for elements of the prime field."""
        if any(self.coeffs[1:]):
            raise FieldError(f"{self} is not rational")
        return self.coeffs[0]

    def __str__(self) -> str:
        return _poly_str(self.coeffs, "theta")

    def __repr__(self) -> str:
        return f"FieldElement({self})"


# ---------------------------------------------------------------------------
# polynomials over a field (dense, low -> high FieldElement coefficients)


def kx_strip(f: list[FieldElement]) -> list[FieldElement]:
    while f and f[-1].is_zero():
        f.pop()
    return f


def kx_degree(f: Sequence[FieldElement]) -> int:
    return len(kx_strip(list(f))) - 1


def kx_eval(f: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    acc = x.field.zero()
    for c in reversed(list(f)):
        acc = acc * x + c
    return acc


def kx_monic(f: Sequence[FieldElement]) -> list[FieldElement]:
    f = kx_strip(list(f))
    if not f:
        return f
    inv = f[-1].inverse()
    return [c * inv for c in f]


def kx_divmod(
    a: Sequence[FieldElement], b: Sequence[FieldElement]
) -> tuple[list[FieldElement], list[FieldElement]]:
    b = kx_strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    field = b[-1].field
    rem = list(a)
    quot = [field.zero()] * max(0, len(rem) - len(b) + 1)
    inv_lead = b[-1].inverse()
    while len(kx_strip(rem)) >= len(b):
        rem = kx_strip(rem)
        shift = len(rem) - len(b)
        factor = rem[-1] * inv_lead
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = rem[shift + i] - factor * bi
    return kx_strip(quot), kx_strip(rem)


def kx_gcd(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    r0, r1 = kx_strip(list(a)), kx_strip(list(b))
    while r1:
        _, r = kx_divmod(r0, r1)
        r0, r1 = r1, r
    return kx_monic(r0)


def kx_derivative(f: Sequence[FieldElement]) -> list[FieldElement]:
    return kx_strip([c * i for i, c in enumerate(f)][1:])


def kx_shift(f: Sequence[FieldElement], c: FieldElement) -> list[FieldElement]:
    """f(x + c) by Horner on (x + c)."""
    field = c.field
    res: list[FieldElement] = []
    for coef in reversed(list(f)):
        nxt = [field.zero()] + res
        for i, r in enumerate(res):
            nxt[i] = nxt[i] + c * r
        nxt[0] = nxt[0] + coef
        res = nxt
    return kx_strip(res)


# ---------------------------------------------------------------------------
# roots in the field


def roots_in_field(
    f: Sequence[FieldElement], field: ExactField
) -> list[tuple[FieldElement, int]]:
    """All roots of f lying in the field, with multiplicities.

    Non-root factors (roots in proper extensions) are silently absent;
    callers compare total found multiplicity against the degree to detect
    a shortfall.
    """
    poly = kx_strip(list(f))
    if not poly:
        raise ValueError("the zero polynomial has every element as a root")
    if len(poly) == 1:
        return []
    if field.is_rational:
        distinct = _rational_roots([c.coeffs[0] for c in poly])
        roots = [field.element(r) for r in distinct]
    else:
        roots = _number_field_roots(poly, field)
    out = []
    for root in roots:
        mult = 0
        work = poly
        while True:
            quot, rem = kx_divmod(work, [-root, field.one()])
            if rem:
                break
            mult += 1
            work = quot
        if mult:
            out.append((root, mult))
    return out


def _rational_roots(coeffs: Sequence[Rat]) -> list[Rat]:
    """Distinct rational roots by the rational root theorem."""
    poly = list(coeffs)
    roots: list[Rat] = []
    # factor out x^v
    v = 0
    while poly and not poly[0]:
        poly.pop(0)
        v += 1
    if v:
        roots.append(Rat(0))
    if len(poly) <= 1:
        return roots
    den = 1
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    const, lead = abs(ints[0]), abs(ints[-1])
    for p in _divisors(const):
        for q in _divisors(lead):
            if gcd(p, q) != 1:
                continue
            for cand in (Rat(p, q), Rat(-p, q)):
                acc = Rat(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return roots


_SHIFT_ATTEMPTS = 64


def _number_field_roots(
    poly: list[FieldElement], field: ExactField
) -> list[FieldElement]:
    """Distinct roots in Q[theta]/(m) via the square-free norm trick."""
    import sympy

    x, th = sympy.symbols("_x _theta")
    m_expr = sum(
        sympy.Rational(c.numerator, c.denominator) * th**i
        for i, c in enumerate(field.min_poly)
    )

    # square-free part, monic
    work = kx_monic(poly)
    g = kx_gcd(work, kx_derivative(work))
    if len(g) > 1:
        work, _ = kx_divmod(work, g)
        work = kx_monic(work)

    theta = field.generator()
    for s in range(_SHIFT_ATTEMPTS):
        shifted = kx_shift(work, theta * (-s))
        g_expr = sympy.expand(
            sum(_to_sympy(c, th) * x**i for i, c in enumerate(shifted))
        )
        norm = sympy.expand(sympy.resultant(m_expr, g_expr, th))
        norm_poly = sympy.Poly(norm, x)
        if sympy.gcd(norm_poly, norm_poly.diff(x)).degree() > 0:
            continue
        roots = []
        for factor, _ in sympy.factor_list(norm_poly)[1]:
            if factor.degree(x) > field.degree:
                continue
            q_kx = [field.element(_from_sympy_rat(c)) for c in reversed(factor.all_coeffs())]
            h = kx_gcd(shifted, q_kx)
            if len(h) == 2:  # linear: x - rho
                rho = -h[0]
                roots.append(rho - theta * s)
        return roots
    raise FieldError("could not separate conjugate roots; shift search exhausted")


def _to_sympy(elem: FieldElement, th):
    import sympy

    return sum(
        sympy.Rational(c.numerator, c.denominator) * th**i
        for i, c in enumerate(elem.coeffs)
    )


def _from_sympy_rat(value) -> Rat:
    return Rat(int(value.p), int(value.q))
