"""Coordinate-level configurations over an exact field.

Curves are lines a*X + b*Y + c*Z and conics
a*X^2 + b*Y^2 + c*Z^2 + d*XY + e*XZ + f*YZ with coefficients in an
:class:`~harbourne.exactfield.ExactField`.  Conics are required to be
irreducible (nondegenerate symmetric matrix), so every curve here is
smooth and local intersection data is well defined.

Intersection points are only ever reported with coordinates in the
declared field; there is no automatic field extension.  When the
in-field points do not account for the full Bezout count the operation
fails with IntersectionOutsideField, and the caller picks a larger field
explicitly.  Conic pairs are intersected by pencil degeneration (find a
degenerate member over the field, split it into lines); a resultant
projection fallback covers the cases where no member splits, and exact
local multiplicities come from the root multiplicities of the second
conic pulled back through a rational parametrization of the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Sequence

from .exactfield import (
    ExactField,
    FieldElement,
    kx_gcd,
    kx_strip,
    roots_in_field,
)
from .profiles import (
    CONICS,
    ConfigurationProfile,
    HarbourneError,
    LINES,
    validate,
)


class GeometryError(HarbourneError):
    pass


class IntersectionOutsideField(GeometryError):
    """In-field intersection points fall short of the Bezout count."""

    def __init__(self, message, found, expected):
        self.found = found
        self.expected = expected
        super().__init__(message)


class NonTransversalIntersection(GeometryError):
    def __init__(self, message, pair, point):
        self.pair = pair
        self.point = point
        super().__init__(message)


class MixedClassesError(GeometryError):
    pass


class DegreeOutOfRangeError(GeometryError):
    pass


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """Point of the projective plane; equality is projective."""

    coords: tuple[FieldElement, FieldElement, FieldElement]

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError("a projective point has three coordinates")
        fields = {c.field for c in self.coords}
        if len(fields) != 1:
            raise GeometryError("coordinates must share one field")
        if all(c.is_zero() for c in self.coords):
            raise ValueError("(0:0:0) is not a projective point")

    @property
    def field(self) -> ExactField:
        return self.coords[0].field

    def canonical(self) -> "ProjPoint":
        """Scale so the first nonzero coordinate is 1."""
        for c in self.coords:
            if not c.is_zero():
                inv = c.inverse()
                return ProjPoint(tuple(x * inv for x in self.coords))
        raise AssertionError("unreachable: zero point")

    def sort_key(self):
        return tuple(c.coeffs for c in self.canonical().coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.field != other.field:
            return False
        return all(c.is_zero() for c in cross(self.coords, other.coords))

    def __hash__(self):
        return hash(self.sort_key())

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


def point(field: ExactField, x, y, z) -> ProjPoint:
    return ProjPoint((field.element(x), field.element(y), field.element(z)))


def cross(u: Sequence[FieldElement], v: Sequence[FieldElement]):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


# ---------------------------------------------------------------------------
# curves


class CurveForm(Enum):
    LINE = "line"
    CONIC = "conic"


@dataclass(frozen=True, eq=False)
class PlaneCurve:
    """Line a*X+b*Y+c*Z or conic a*X^2+b*Y^2+c*Z^2+d*XY+e*XZ+f*YZ."""

    form: CurveForm
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        expected = 3 if self.form is CurveForm.LINE else 6
        if len(self.coeffs) != expected:
            raise ValueError(f"{self.form.value} takes {expected} coefficients")
        fields = {c.field for c in self.coeffs}
        if len(fields) != 1:
            raise GeometryError("coefficients must share one field")
        if all(c.is_zero() for c in self.coeffs):
            raise ValueError("zero coefficient vector")
        if self.form is CurveForm.CONIC and det3(conic_matrix(self)).is_zero():
            raise GeometryError(
                "conic is degenerate (zero determinant), hence reducible; "
                "only irreducible conics are supported"
            )

    @property
    def field(self) -> ExactField:
        return self.coeffs[0].field

    @property
    def degree(self) -> int:
        return 1 if self.form is CurveForm.LINE else 2

    def evaluate(self, p: ProjPoint) -> FieldElement:
        x, y, z = p.coords
        if self.form is CurveForm.LINE:
            a, b, c = self.coeffs
            return a * x + b * y + c * z
        a, b, c, d, e, f = self.coeffs
        return a * x * x + b * y * y + c * z * z + d * x * y + e * x * z + f * y * z

    def gradient(self, p: ProjPoint) -> tuple[FieldElement, ...]:
        x, y, z = p.coords
        if self.form is CurveForm.LINE:
            return self.coeffs
        a, b, c, d, e, f = self.coeffs
        return (
            2 * a * x + d * y + e * z,
            2 * b * y + d * x + f * z,
            2 * c * z + e * x + f * y,
        )

    def __str__(self):
        return f"{self.form.value}[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"PlaneCurve({self})"


def line(field: ExactField, a, b, c) -> PlaneCurve:
    return PlaneCurve(CurveForm.LINE, tuple(field.element(v) for v in (a, b, c)))


def conic(field: ExactField, a, b, c, d, e, f) -> PlaneCurve:
    return PlaneCurve(
        CurveForm.CONIC, tuple(field.element(v) for v in (a, b, c, d, e, f))
    )


def proportional(c1: PlaneCurve, c2: PlaneCurve) -> bool:
    if c1.form is not c2.form:
        return False
    u, v = c1.coeffs, c2.coeffs
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if not (u[i] * v[j] - u[j] * v[i]).is_zero():
                return False
    return True


@dataclass(frozen=True, eq=False)
class GeometricConfiguration:
    field: ExactField
    curves: tuple[PlaneCurve, ...]

    def __post_init__(self):
        for c in self.curves:
            if c.field != self.field:
                raise GeometryError("curve field differs from configuration field")
        for a, b in combinations(self.curves, 2):
            if proportional(a, b):
                raise GeometryError(f"curves must be pairwise distinct: {a} ~ {b}")


def incident(curve: PlaneCurve, p: ProjPoint) -> bool:
    return curve.evaluate(p).is_zero()


# ---------------------------------------------------------------------------
# 3x3 exact linear algebra (enough for conic matrices and basis changes)

Mat3 = tuple[tuple[FieldElement, ...], ...]


def conic_matrix(c: PlaneCurve) -> Mat3:
    a, b, cc, d, e, f = c.coeffs
    return (
        (a, d / 2, e / 2),
        (d / 2, b, f / 2),
        (e / 2, f / 2, cc),
    )


def det3(m: Mat3) -> FieldElement:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def mat_vec(m: Mat3, v: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    return tuple(sum((m[i][j] * v[j] for j in range(3)), v[0].field.zero()) for i in range(3))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    zero = a[0][0].field.zero()
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(3)), zero) for j in range(3))
        for i in range(3)
    )


def transpose(m: Mat3) -> Mat3:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


def adjugate3(m: Mat3) -> Mat3:
    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = (
            m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
            - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
        )
        return minor if (i + j) % 2 == 0 else -minor

    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


def kernel_vector(m: Mat3) -> tuple[FieldElement, ...] | None:
    """A nonzero kernel vector of a singular 3x3 matrix, if rank is 2."""
    adj = adjugate3(m)
    for col in range(3):
        v = tuple(adj[row][col] for row in range(3))
        if any(not c.is_zero() for c in v):
            return v
    return None  # rank <= 1


# ---------------------------------------------------------------------------
# binary forms (homogeneous in two variables; index = power of the first)


def bf_mul(a: Sequence[FieldElement], b: Sequence[FieldElement]):
    zero = a[0].field.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def bf_add(a, b):
    return [x + y for x, y in zip(a, b)]


def bf_scale(a, s: FieldElement):
    return [s * x for x in a]


def binary_form_roots(coeffs: Sequence[FieldElement], field: ExactField):
    """Roots in P^1(K) of a binary form, with multiplicities.

    Returns (roots, found_total) where roots is a list of
    ((t, u), multiplicity) pairs and found_total counts multiplicity over
    the in-field roots; the form's degree minus found_total is the part
    living in proper extensions.
    """
    degree = len(coeffs) - 1
    if all(c.is_zero() for c in coeffs):
        raise ValueError("zero binary form")
    lo = 0
    while coeffs[lo].is_zero():
        lo += 1
    hi = degree
    while coeffs[hi].is_zero():
        hi -= 1
    roots = []
    if lo:  # factor t^lo: root (0:1)
        roots.append(((field.zero(), field.one()), lo))
    if hi < degree:  # factor u^(degree-hi): root (1:0)
        roots.append(((field.one(), field.zero()), degree - hi))
    middle = list(coeffs[lo : hi + 1])
    if len(middle) > 1:
        for root, mult in roots_in_field(middle, field):
            roots.append(((root, field.one()), mult))
    found = sum(m for _, m in roots)
    return roots, found


# ---------------------------------------------------------------------------
# intersection


def intersect(c1: PlaneCurve, c2: PlaneCurve) -> list[tuple[ProjPoint, int]]:
    """All in-field intersection points with local multiplicities.

    Multiplicities sum to the Bezout product of the degrees; a shortfall
    raises IntersectionOutsideField carrying whatever was found.
    """
    if c1.field != c2.field:
        raise GeometryError("curves live over different fields")
    if proportional(c1, c2):
        raise GeometryError("curves must not be proportional")
    if c1.form is CurveForm.LINE and c2.form is CurveForm.LINE:
        pt = ProjPoint(cross(c1.coeffs, c2.coeffs))
        return [(pt, 1)]
    if c1.form is CurveForm.LINE:
        return _line_conic(c1, c2)
    if c2.form is CurveForm.LINE:
        return _line_conic(c2, c1)
    return _conic_conic(c1, c2)


def _span_of_line(l: PlaneCurve) -> tuple[ProjPoint, ProjPoint]:
    a, b, c = l.coeffs
    field = l.field
    if not a.is_zero():
        p1 = point(field, -b / a, 1, 0)
        p2 = point(field, -c / a, 0, 1)
    elif not b.is_zero():
        p1 = point(field, 1, 0, 0)
        p2 = point(field, 0, -c / b, 1)
    else:
        p1 = point(field, 1, 0, 0)
        p2 = point(field, 0, 1, 0)
    return p1, p2


def _conic_bilinear(c: PlaneCurve, p: ProjPoint, q: ProjPoint) -> FieldElement:
    """Q(p+q) - Q(p) - Q(q): the polarization (twice the matrix pairing)."""
    s = ProjPoint(tuple(a + b for a, b in zip(p.coords, q.coords)))
    return c.evaluate(s) - c.evaluate(p) - c.evaluate(q)


def _combine_points(t: FieldElement, a: ProjPoint, u: FieldElement, b: ProjPoint):
    return tuple(t * x + u * y for x, y in zip(a.coords, b.coords))


def _line_conic(l: PlaneCurve, q: PlaneCurve) -> list[tuple[ProjPoint, int]]:
    a, b = _span_of_line(l)
    # Q(t*a + u*b) = alpha t^2 + beta t u + gamma u^2
    alpha = q.evaluate(a)
    gamma = q.evaluate(b)
    beta = _conic_bilinear(q, a, b)
    roots, found = binary_form_roots([gamma, beta, alpha], l.field)
    pts = [
        (ProjPoint(_combine_points(t, a, u, b)), mult) for (t, u), mult in roots
    ]
    pts.sort(key=lambda pm: pm[0].sort_key())
    if found < 2:
        raise IntersectionOutsideField(
            f"line/conic meet in {found} in-field point(s) of 2 over "
            f"{l.field.label()}",
            found=pts,
            expected=2,
        )
    return pts


def _conic_parametrization(q: PlaneCurve, p0: ProjPoint):
    """Binary-quadratic triple parametrizing the smooth conic q from a
    point p0 on it: direction (t:u) -> second intersection of the line
    through p0 with that direction."""
    field = q.field
    # two points spanning a coordinate line that avoids p0
    for a, b in (
        (point(field, 1, 0, 0), point(field, 0, 1, 0)),
        (point(field, 1, 0, 0), point(field, 0, 0, 1)),
        (point(field, 0, 1, 0), point(field, 0, 0, 1)),
    ):
        if not det3((a.coords, b.coords, p0.coords)).is_zero():
            break
    else:
        raise AssertionError("point lies on all three coordinate lines")
    qa, qb = q.evaluate(a), q.evaluate(b)
    bab = _conic_bilinear(q, a, b)
    bpa = _conic_bilinear(q, p0, a)
    bpb = _conic_bilinear(q, p0, b)
    # Q(ta + ub) and B(p0, ta + ub) as binary forms in (t, u)
    q_dir = [qb, bab, qa]  # u^2, tu, t^2
    b_dir = [bpb, bpa]  # u, t
    comps = []
    for idx in range(3):
        p0c = p0.coords[idx]
        ac, bc = a.coords[idx], b.coords[idx]
        dir_c = [bc, ac]
        term1 = bf_scale(q_dir, p0c)
        term2 = bf_mul(b_dir, dir_c)
        comps.append([x - y for x, y in zip(term1, term2)])
    return comps  # three binary quadratics (phi_X, phi_Y, phi_Z)


def _eval_conic_on_forms(q: PlaneCurve, comps) -> list[FieldElement]:
    a, b, c, d, e, f = q.coeffs
    X, Y, Z = comps
    total = None
    for coeff, u, v in (
        (a, X, X),
        (b, Y, Y),
        (c, Z, Z),
        (d, X, Y),
        (e, X, Z),
        (f, Y, Z),
    ):
        term = bf_scale(bf_mul(u, v), coeff)
        total = term if total is None else bf_add(total, term)
    return total


def _conic_conic(f: PlaneCurve, g: PlaneCurve) -> list[tuple[ProjPoint, int]]:
    base = _pencil_candidates(f, g)
    if not base:
        base = _resultant_candidates(f, g)
    if not base:
        raise IntersectionOutsideField(
            f"conic pair has no in-field intersection point of 4 over "
            f"{f.field.label()}",
            found=[],
            expected=4,
        )
    p0 = base[0]
    comps = _conic_parametrization(f, p0)
    quartic = _eval_conic_on_forms(g, comps)
    roots, found = binary_form_roots(quartic, f.field)
    pts = []
    for (t, u), mult in roots:
        coords = tuple(
            bf_eval(comp, t, u) for comp in comps
        )
        pt = ProjPoint(coords)
        if not (f.evaluate(pt).is_zero() and g.evaluate(pt).is_zero()):
            raise AssertionError("parametrized intersection point off the curves")
        pts.append((pt, mult))
    pts.sort(key=lambda pm: pm[0].sort_key())
    if found < 4:
        raise IntersectionOutsideField(
            f"conic pair meets in {found} in-field point(s) of 4 over "
            f"{f.field.label()}",
            found=pts,
            expected=4,
        )
    return pts


def bf_eval(form: Sequence[FieldElement], t: FieldElement, u: FieldElement):
    degree = len(form) - 1
    zero = t.field.zero()
    total = zero
    for i, c in enumerate(form):
        total = total + c * t**i * u ** (degree - i)
    return total


def _pencil_candidates(f: PlaneCurve, g: PlaneCurve) -> list[ProjPoint]:
    """In-field base points found by splitting degenerate pencil members."""
    field = f.field
    mf, mg = conic_matrix(f), conic_matrix(g)

    def member(lam: FieldElement, mu: FieldElement) -> Mat3:
        return tuple(
            tuple(lam * mf[i][j] + mu * mg[i][j] for j in range(3)) for i in range(3)
        )

    # det(lam*Mf + mu*Mg) interpolated as a binary cubic in (lam, mu)
    one, zero = field.one(), field.zero()
    d10 = det3(member(one, zero))
    d01 = det3(member(zero, one))
    d11 = det3(member(one, one))
    d21 = det3(member(one + one, one))
    # c3 lam^3 + c2 lam^2 mu + c1 lam mu^2 + c0 mu^3
    c3, c0 = d10, d01
    # d11 = c3+c2+c1+c0 ; d21 = 8c3+4c2+2c1+c0
    s1 = d11 - c3 - c0
    s2 = d21 - c3 * 8 - c0
    c1 = (s1 * 4 - s2) / 2
    c2 = s1 - c1
    roots, _ = binary_form_roots([c0, c1, c2, c3], field)

    out: list[ProjPoint] = []
    for (lam, mu), _mult in roots:
        lines = _split_degenerate(member(lam, mu), field)
        if lines is None:
            continue
        for l in lines:
            try:
                hits = _line_conic(l, f)
            except IntersectionOutsideField as err:
                hits = err.found
            for pt, _m in hits:
                if g.evaluate(pt).is_zero() and pt not in out:
                    out.append(pt)
    return out


def _split_degenerate(m: Mat3, field: ExactField) -> list[PlaneCurve] | None:
    """Split a singular conic matrix into its (one or two) lines over the
    field; None when the lines only exist over an extension."""
    v = kernel_vector(m)
    if v is None:
        # rank 1: double line, read off a nonzero row
        for i in range(3):
            if not m[i][i].is_zero():
                coeffs = tuple(m[i][j] for j in range(3))
                l = PlaneCurve(CurveForm.LINE, coeffs)
                return [l, l]
        return None  # rank-1 with zero diagonal cannot occur for symmetric m
    # rank 2: lines through the kernel point; restrict to a complementary
    # coordinate pair
    es = [
        (field.one(), field.zero(), field.zero()),
        (field.zero(), field.one(), field.zero()),
        (field.zero(), field.zero(), field.one()),
    ]
    for e1, e2 in combinations(es, 2):
        if not det3((v, e1, e2)).is_zero():
            break
    else:
        raise AssertionError("kernel vector cannot be completed to a basis")

    def quad(u):
        return sum(
            (m[i][j] * u[i] * u[j] for i in range(3) for j in range(3)),
            field.zero(),
        )

    def pair(u, w):
        return sum(
            (m[i][j] * u[i] * w[j] for i in range(3) for j in range(3)),
            field.zero(),
        )

    alpha = quad(e1)
    gamma = quad(e2)
    beta = pair(e1, e2) * 2
    roots, found = binary_form_roots([gamma, beta, alpha], field)
    if found < 2:
        return None
    lines = []
    for (s, w), mult in roots:
        direction = tuple(s * a + w * b for a, b in zip(e1, e2))
        coeffs = cross(v, direction)
        l = PlaneCurve(CurveForm.LINE, coeffs)
        lines.extend([l] * mult)
    return lines


def _sylvester_resultant(fc, gc, field: ExactField):
    """Resultant of two polynomials whose coefficients are binary forms.

    fc, gc: lists (low to high in the eliminated variable) of binary-form
    coefficient lists.  Returns a binary form.
    """
    dm = len(fc) - 1
    dn = len(gc) - 1
    size = dm + dn

    rows = []
    for shift in range(dn):
        row = [None] * size
        for i, coeff in enumerate(reversed(fc)):
            row[shift + i] = coeff
        rows.append(row)
    for shift in range(dm):
        row = [None] * size
        for i, coeff in enumerate(reversed(gc)):
            row[shift + i] = coeff
        rows.append(row)

    def det(rws):
        if len(rws) == 1:
            return rws[0][0] if rws[0][0] is not None else None
        total = None
        for j, entry in enumerate(rws[0]):
            if entry is None:
                continue
            minor = [
                [r[jj] for jj in range(len(r)) if jj != j] for r in rws[1:]
            ]
            sub = det(minor)
            if sub is None:
                continue
            term = bf_mul(entry, sub)
            if j % 2 == 1:
                term = bf_scale(term, field.element(-1))
            total = term if total is None else _bf_add_pad(total, term, field)
        return total

    res = det(rows)
    return res if res is not None else [field.zero()]


def _bf_add_pad(a, b, field: ExactField):
    # the resultant is homogeneous: every surviving term has one degree
    if len(a) != len(b):
        raise AssertionError("inhomogeneous resultant terms")
    return bf_add(a, b)


def _conic_var_coeffs(c: PlaneCurve, var: int):
    """Conic as a polynomial in coordinate ``var`` with binary-form
    coefficients in the two remaining coordinates (in increasing index
    order)."""
    a, b, cc, d, e, f = c.coeffs
    if var == 2:  # in Z; forms in (X, Y), index = power of X
        return [[b, d, a], [f, e], [cc]]
    if var == 1:  # in Y; forms in (X, Z)
        return [[cc, e, a], [f, d], [b]]
    # in X; forms in (Y, Z)
    return [[cc, f, b], [e, d], [a]]


def _resultant_candidates(f: PlaneCurve, g: PlaneCurve) -> list[ProjPoint]:
    """In-field common points via the three coordinate projections."""
    field = f.field
    out: list[ProjPoint] = []
    for var in (2, 1, 0):
        fvc = _conic_var_coeffs(f, var)
        gvc = _conic_var_coeffs(g, var)
        fdeg = 2 if not fvc[2][0].is_zero() else 1
        gdeg = 2 if not gvc[2][0].is_zero() else 1
        res = _sylvester_resultant(fvc[: fdeg + 1], gvc[: gdeg + 1], field)
        if all(c.is_zero() for c in res):
            raise AssertionError("vanishing resultant for distinct irreducible conics")
        roots, _found = binary_form_roots(res, field)
        keep = [0, 1, 2]
        keep.remove(var)
        for (t, u), _mult in roots:
            # fiber: common roots in the eliminated variable
            fib_f = _fiber_poly(f, var, t, u)
            fib_g = _fiber_poly(g, var, t, u)
            common = kx_gcd(fib_f, fib_g)
            if len(common) < 2:
                continue
            for z0, _m in roots_in_field(common, field):
                coords = [None, None, None]
                coords[keep[0]] = t
                coords[keep[1]] = u
                coords[var] = z0
                pt = ProjPoint(tuple(coords))
                if (
                    f.evaluate(pt).is_zero()
                    and g.evaluate(pt).is_zero()
                    and pt not in out
                ):
                    out.append(pt)
    return out


def _fiber_poly(c: PlaneCurve, var: int, t: FieldElement, u: FieldElement):
    coeffs = []
    for form in _conic_var_coeffs(c, var):
        coeffs.append(bf_eval(form, t, u))
    return kx_strip(coeffs)


# ---------------------------------------------------------------------------
# transversality and profile extraction


def transversal_at(c1: PlaneCurve, c2: PlaneCurve, p: ProjPoint) -> bool:
    """True iff both curves are smooth at p with distinct tangents."""
    if not (incident(c1, p) and incident(c2, p)):
        raise GeometryError("point does not lie on both curves")
    g1 = c1.gradient(p)
    g2 = c2.gradient(p)
    if all(c.is_zero() for c in g1) or all(c.is_zero() for c in g2):
        return False
    return not all(c.is_zero() for c in cross(g1, g2))


def extract_profile(config: GeometricConfiguration) -> ConfigurationProfile:
    """Multiplicity histogram of a transversal configuration.

    Requires every pairwise intersection to be in-field and transversal;
    the resulting profile must satisfy its incidence identity (Bezout),
    so a validation failure aborts as an internal error.
    """
    curves = config.curves
    if len(curves) < 2:
        raise GeometryError("a configuration needs at least two curves")
    forms = {c.form for c in curves}
    if len(forms) != 1:
        raise MixedClassesError("curves must be all lines or all conics")
    cls = LINES if forms == {CurveForm.LINE} else CONICS

    points: dict = {}
    for i, j in combinations(range(len(curves)), 2):
        for pt, mult in intersect(curves[i], curves[j]):
            if mult > 1:
                raise NonTransversalIntersection(
                    f"curves {i} and {j} meet at {pt} with multiplicity {mult}",
                    pair=(i, j),
                    point=pt,
                )
            points.setdefault(pt.sort_key(), pt)

    t: dict[int, int] = {}
    for pt in points.values():
        r = sum(1 for c in curves if incident(c, pt))
        if r < 2:
            raise AssertionError("intersection point on fewer than two curves")
        t[r] = t.get(r, 0) + 1

    profile = ConfigurationProfile(cls, len(curves), t)
    report = validate(profile)
    if not report.ok:
        raise AssertionError(
            "extracted profile fails its incidence identity: "
            + "; ".join(v.message for v in report.violations)
        )
    return profile


# ---------------------------------------------------------------------------
# the standard Cremona transformation (base points = coordinate triangle)


def _is_coordinate_vertex(p: ProjPoint) -> bool:
    return sum(1 for c in p.coords if c.is_zero()) == 2


def cremona_map_point(p: ProjPoint) -> ProjPoint:
    """(x:y:z) -> (yz:xz:xy); undefined at the three coordinate vertices."""
    if _is_coordinate_vertex(p):
        raise GeometryError("cremona map is undefined at a base point")
    x, y, z = p.coords
    return ProjPoint((y * z, x * z, x * y))


_MONO_LINE = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_MONO_CONIC = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


def _curve_monomials(c: PlaneCurve) -> dict[tuple[int, int, int], FieldElement]:
    monos = _MONO_LINE if c.form is CurveForm.LINE else _MONO_CONIC
    return {m: coeff for m, coeff in zip(monos, c.coeffs) if not coeff.is_zero()}


def cremona_map_curve(c: PlaneCurve) -> PlaneCurve:
    """Image of a line or conic under (x:y:z) -> (yz:xz:xy).

    The substituted form is divided by the coordinate monomial carrying
    the base-point multiplicities; the image degree 2d - m1 - m2 - m3
    must again be 1 or 2 (lines and conics are the supported kinds).
    """
    field = c.field
    base = [point(field, 1, 0, 0), point(field, 0, 1, 0), point(field, 0, 0, 1)]
    # multiplicity of a smooth curve at a point is its incidence indicator
    mults = tuple(1 if incident(c, b) else 0 for b in base)

    substituted: dict[tuple[int, int, int], FieldElement] = {}
    for (i, j, k), coeff in _curve_monomials(c).items():
        # X^i Y^j Z^k -> (YZ)^i (XZ)^j (XY)^k = X^(j+k) Y^(i+k) Z^(i+j)
        key = (j + k, i + k, i + j)
        substituted[key] = substituted.get(key, field.zero()) + coeff
    substituted = {m: v for m, v in substituted.items() if not v.is_zero()}

    mins = tuple(min(m[axis] for m in substituted) for axis in range(3))
    if mins != mults:
        raise AssertionError(
            f"factored monomial {mins} disagrees with base multiplicities {mults}"
        )
    reduced = {
        tuple(m[axis] - mins[axis] for axis in range(3)): v
        for m, v in substituted.items()
    }
    new_degree = 2 * c.degree - sum(mults)
    if any(sum(m) != new_degree for m in reduced):
        raise AssertionError("inhomogeneous image form")
    if new_degree == 1:
        coeffs = tuple(reduced.get(m, field.zero()) for m in _MONO_LINE)
        return PlaneCurve(CurveForm.LINE, coeffs)
    if new_degree == 2:
        coeffs = tuple(reduced.get(m, field.zero()) for m in _MONO_CONIC)
        return PlaneCurve(CurveForm.CONIC, coeffs)
    raise DegreeOutOfRangeError(
        f"image has degree {new_degree}; only lines and conics are supported "
        "(degree 0 means the curve is contracted to a point)"
    )


def triangle_frame(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> Mat3:
    """Change of coordinates sending three non-collinear points to the
    coordinate triangle: returns the matrix T with T*p_i proportional
    to e_i.  Apply with :func:`apply_to_point` / :func:`apply_to_curve`
    (the latter takes the columns matrix, see below)."""
    cols = tuple(zip(p1.coords, p2.coords, p3.coords))
    if det3(cols).is_zero():
        raise GeometryError("base points are collinear")
    return adjugate3(cols)


def frame_inverse_columns(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> Mat3:
    """Columns matrix M = (p1 | p2 | p3): the inverse frame, mapping the
    coordinate triangle back to the three points."""
    cols = tuple(zip(p1.coords, p2.coords, p3.coords))
    if det3(cols).is_zero():
        raise GeometryError("base points are collinear")
    return cols


def apply_to_point(m: Mat3, p: ProjPoint) -> ProjPoint:
    return ProjPoint(mat_vec(m, p.coords))


def apply_to_curve(m_inverse: Mat3, c: PlaneCurve) -> PlaneCurve:
    """Transform a curve by substituting coordinates: the argument is the
    matrix of the inverse point map (new point v satisfies p = M v)."""
    if c.form is CurveForm.LINE:
        coeffs = mat_vec(transpose(m_inverse), c.coeffs)
        return PlaneCurve(CurveForm.LINE, tuple(coeffs))
    s = conic_matrix(c)
    s2 = mat_mul(transpose(m_inverse), mat_mul(s, m_inverse))
    two = c.field.element(2)
    coeffs = (
        s2[0][0],
        s2[1][1],
        s2[2][2],
        s2[0][1] * two,
        s2[0][2] * two,
        s2[1][2] * two,
    )
    return PlaneCurve(CurveForm.CONIC, coeffs)


# ---------------------------------------------------------------------------
# conics through two fixed points <-> (1,1)-curves on the quadric


@dataclass(frozen=True)
class OneOneForm:
    """Bidegree-(1,1) form sum m[i][j] * u_i * v_j on P^1 x P^1."""

    m: tuple[tuple[FieldElement, FieldElement], tuple[FieldElement, FieldElement]]

    def evaluate(self, u, v) -> FieldElement:
        return (
            self.m[0][0] * u[0] * v[0]
            + self.m[0][1] * u[0] * v[1]
            + self.m[1][0] * u[1] * v[0]
            + self.m[1][1] * u[1] * v[1]
        )

    def determinant(self) -> FieldElement:
        return self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]


def to_quadric_curve(c: PlaneCurve) -> OneOneForm:
    """(1,1)-form of an irreducible conic through (1:0:0) and (0:1:0).

    Coordinates on the quadric are the projections from the two base
    points: u = (y:z) and v = (x:z).  For the conic
    c*Z^2 + d*XY + e*XZ + f*YZ the matrix is [[d, f], [e, c]].
    """
    if c.form is not CurveForm.CONIC:
        raise GeometryError("only conics correspond to (1,1)-curves")
    a, b, cc, d, e, f = c.coeffs
    if not a.is_zero() or not b.is_zero():
        raise GeometryError(
            "conic must pass through both projection base points "
            "(1:0:0) and (0:1:0)"
        )
    form = OneOneForm(((d, f), (e, cc)))
    if form.determinant().is_zero():
        raise AssertionError("irreducible conic mapped to a degenerate (1,1)-form")
    return form


def quadric_image_point(p: ProjPoint):
    """Image ((y:z), (x:z)) of a plane point on the quadric; undefined at
    the two projection base points."""
    x, y, z = p.coords
    if (y.is_zero() and z.is_zero()) or (x.is_zero() and z.is_zero()):
        raise GeometryError("projection is undefined at a base point")
    return ((y, z), (x, z))
