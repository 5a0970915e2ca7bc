"""Distinguished point orbits, tritangent planes, and osculating data.

Labels are combinatorial: a Weierstrass label records where the roots
alpha, beta, gamma of x^3 + 2x^2 + 3x + 4 sit among the five coordinates
(the other two are 1); vertex and face-centre labels are arrangements of the
templates [1:i:-1:-i:0] and [1:zeta:...:zeta^4] up to the projective
rescaling that identifies arrangements (by powers of i resp. zeta).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import models as md
from . import numfield as nf
from . import symmetry as sym
from . import unipoly as up
from .errors import BadIndices, ContactOrderUnexpected, DegenerateIntersection, UnmatchedRoot
from .models import FormalDivisor, ProjectivePoint
from .numfield import ALPHA, BETA, GAMMA, QAB, QAB15, QZ, ZETA

WEIERSTRASS = "WEIERSTRASS"
VERTEX = "VERTEX"
FACE_CENTRE = "FACE_CENTRE"


@dataclass(frozen=True)
class GeometricPointLabel:
    kind: str
    data: tuple

    def text(self) -> str:
        if self.kind == WEIERSTRASS:
            return "W(%d,%d,%d)" % tuple(i + 1 for i in self.data)
        if self.kind == VERTEX:
            sym_map = {0: "1", 1: "i", 2: "-1", 3: "-i", None: "0"}
            return "V(" + ",".join(sym_map[e] for e in self.data) + ")"
        return "F(" + ",".join(f"z^{e}" if e else "1" for e in self.data) + ")"

    def point(self) -> ProjectivePoint:
        if self.kind == WEIERSTRASS:
            i, j, k = self.data
            coords = [QAB.one()] * 5
            coords[i] = QAB(ALPHA)
            coords[j] = BETA
            coords[k] = GAMMA
            return ProjectivePoint(md.P4, coords)
        if self.kind == VERTEX:
            from .quotients import QI, I_UNIT
            coords = []
            for e in self.data:
                coords.append(QI(0) if e is None else I_UNIT ** e)
            return ProjectivePoint(md.P4, coords)
        coords = [ZETA ** e for e in self.data]
        return ProjectivePoint(md.P4, coords)


def _canon_vertex(arr: tuple) -> tuple:
    cands = []
    for k in range(4):
        cands.append(tuple(None if e is None else (e + k) % 4 for e in arr))
    return min(cands, key=lambda t: tuple(-1 if e is None else e for e in t))


def _canon_face(arr: tuple) -> tuple:
    return min(tuple((e + k) % 5 for e in arr) for k in range(5))


def catalog(kind: str) -> list[GeometricPointLabel]:
    """Full orbit with exact coordinates; on-curve verified at build time."""
    if kind == WEIERSTRASS:
        labels = [GeometricPointLabel(WEIERSTRASS, (i, j, k))
                  for i, j, k in itertools.permutations(range(5), 3)]
        # on-curve by Newton's identities over Q: H_m = 2 + p_m = 0
        e1, e2, e3 = Fraction(-2), Fraction(3), Fraction(-4)
        p1 = e1
        p2 = e1 * p1 - 2 * e2
        p3 = e1 * p2 - e2 * p1 + 3 * e3
        assert (2 + p1, 2 + p2, 2 + p3) == (0, 0, 0)
        assert _exact_on_curve(labels[0].point())
        return labels
    if kind == VERTEX:
        seen = {}
        for perm in itertools.permutations([0, 1, 2, 3, None]):
            seen.setdefault(_canon_vertex(perm), perm)
        labels = [GeometricPointLabel(VERTEX, c) for c in sorted(
            seen, key=lambda t: tuple(-1 if e is None else e for e in t))]
        assert _exact_on_curve(labels[0].point())
        return labels
    if kind == FACE_CENTRE:
        seen = {}
        for perm in itertools.permutations(range(5)):
            seen.setdefault(_canon_face(perm), perm)
        labels = [GeometricPointLabel(FACE_CENTRE, c) for c in sorted(seen)]
        assert _exact_on_curve(labels[0].point())
        return labels
    raise BadIndices(f"unknown kind {kind}")


def _exact_on_curve(p: ProjectivePoint) -> bool:
    return all(md._is_zero_like(r) for r in md.evaluate_model(md.P4, p))


def act_label(perm: tuple, label: GeometricPointLabel) -> GeometricPointLabel:
    """The S5 action on labels: permute coordinate positions, re-canonicalize."""
    if label.kind == WEIERSTRASS:
        i, j, k = label.data
        return GeometricPointLabel(WEIERSTRASS, (perm[i], perm[j], perm[k]))
    new = [None] * 5
    for pos in range(5):
        new[perm[pos]] = label.data[pos]
    if label.kind == VERTEX:
        return GeometricPointLabel(VERTEX, _canon_vertex(tuple(new)))
    return GeometricPointLabel(FACE_CENTRE, _canon_face(tuple(new)))


def orbit_stabilizer(label: GeometricPointLabel):
    """(orbit size, stabilizer permutations), purely combinatorial."""
    group = sym.enumerate_group()
    orbit = set()
    stab = []
    for perm in group:
        img = act_label(perm, label)
        orbit.add(img)
        if img == label:
            stab.append(perm)
    return len(orbit), stab


# ---------------------------------------------------------------------------
# tritangent planes

CLASS1 = "CLASS1"
CLASS2 = "CLASS2"

_ROOTS = {"a": None, "b": None, "g": None}


def _root_cycle(distinguished: str):
    """(r_i, r_j, r_k) with the distinguished root first, in (a,b,g) order."""
    order = {"a": (QAB(ALPHA), BETA, GAMMA),
             "b": (BETA, GAMMA, QAB(ALPHA)),
             "g": (GAMMA, QAB(ALPHA), BETA)}
    return order[distinguished]


@dataclass(frozen=True)
class TritangentPlane:
    plane_class: str
    label: tuple                 # CLASS1: (root, j, k); CLASS2: (i, j, k)
    form: tuple                  # five coefficients over QAB

    def text(self) -> str:
        if self.plane_class == CLASS1:
            r, j, k = self.label
            return f"T1({r};{j + 1},{k + 1})"
        return "T2(%d,%d,%d)" % tuple(i + 1 for i in self.label)

    def divisor_labels(self) -> list:
        """The contact divisor combinatorially: class 1 gives the three
        Weierstrass points W_{i j k} (i complementary); class 2 gives
        (W_{ijk}, O+_{ijk}, O-_{ijk})."""
        if self.plane_class == CLASS1:
            _r, j, k = self.label
            rest = [i for i in range(5) if i not in (j, k)]
            return [GeometricPointLabel(WEIERSTRASS, _wpos(self.label[0], i, j, k))
                    for i in rest]
        return [GeometricPointLabel(WEIERSTRASS, self.label),
                ("O+",) + self.label, ("O-",) + self.label]


def _wpos(distinguished: str, i: int, j: int, k: int) -> tuple:
    """Positions of (alpha, beta, gamma) for the W point with the
    distinguished root at position i and the other two at j, k in order."""
    if distinguished == "a":
        return (i, j, k)
    if distinguished == "b":
        return (k, i, j)
    return (j, k, i)


def tritangent_plane(plane_class: str, indices) -> TritangentPlane:
    """CLASS1 indices: (root letter, j, k); CLASS2 indices: (i, j, k)."""
    zero, one = QAB.zero(), QAB.one()
    if plane_class == CLASS1:
        r, j, k = indices
        if j == k or r not in ("a", "b", "g"):
            raise BadIndices(str(indices))
        _, rb, rg = _root_cycle(r)
        form = [zero] * 5
        form[j] = rg
        form[k] = -rb
        # x_j / beta - x_k / gamma cleared of denominators: gamma x_j - beta x_k
        return TritangentPlane(CLASS1, (r, j, k), tuple(form))
    if plane_class == CLASS2:
        i, j, k = indices
        if len({i, j, k}) != 3:
            raise BadIndices(str(indices))
        a, b, g = QAB(ALPHA), BETA, GAMMA
        form = [zero] * 5
        form[i] = (a - 1) * (a + 4)
        form[j] = (b - 1) * (b + 4)
        form[k] = (g - 1) * (g + 4)
        return TritangentPlane(CLASS2, (i, j, k), tuple(form))
    raise BadIndices(plane_class)


def all_tritangent_planes() -> list[TritangentPlane]:
    out = []
    for r in ("a", "b", "g"):
        for j, k in itertools.permutations(range(5), 2):
            out.append(tritangent_plane(CLASS1, (r, j, k)))
    for i, j, k in itertools.permutations(range(5), 3):
        out.append(tritangent_plane(CLASS2, (i, j, k)))
    return out


def o_point(sign: int, i: int, j: int, k: int) -> ProjectivePoint:
    """The non-Weierstrass contact points of the class-2 planes.

    Positions i, j, k carry r^2 + r + 1 for r = alpha, beta, gamma; the two
    remaining positions carry (1 +- i sqrt15)/2, the smaller position taking
    the + sign for sign = +1."""
    K = QAB15
    s15 = nf.ISQRT15
    a, b, g = K(ALPHA), K(BETA), K(GAMMA)
    coords = [None] * 5
    coords[i] = a * a + a + 1
    coords[j] = b * b + b + 1
    coords[k] = g * g + g + 1
    rest = sorted(set(range(5)) - {i, j, k})
    half = K(Fraction(1, 2))
    coords[rest[0]] = (1 + sign * s15) * half
    coords[rest[1]] = (1 - sign * s15) * half
    return ProjectivePoint(md.P4, coords)


# ---------------------------------------------------------------------------
# hyperplane sections via a conic parametrization through a known point


def _plane_basis(form, through: ProjectivePoint, K):
    """Basis (n1=through, n2, n3) of {H1 = 0, form . x = 0} over K."""
    c = [K(v) for v in form]
    ones = [K.one()] * 5
    rows = [ones, c]
    # find two pivot columns making the 2x2 invertible
    piv = None
    for p1, p2 in itertools.combinations(range(5), 2):
        det = rows[0][p1] * rows[1][p2] - rows[0][p2] * rows[1][p1]
        if not md._is_zero_like(det):
            piv = (p1, p2, det)
            break
    if piv is None:
        raise DegenerateIntersection("plane contains the coordinate simplex")
    p1, p2, det = piv
    basis = []
    for free in range(5):
        if free in (p1, p2):
            continue
        rhs = [-rows[0][free], -rows[1][free]]
        x1 = (rhs[0] * rows[1][p2] - rhs[1] * rows[0][p2]) / det
        x2 = (rows[0][p1] * rhs[1] - rows[1][p1] * rhs[0]) / det
        vec = [K(0)] * 5
        vec[p1] = x1
        vec[p2] = x2
        vec[free] = K.one()
        basis.append(vec)
    n1 = [K(v) for v in through.coords]
    for cand in itertools.combinations(range(3), 2):
        trial = [n1, basis[cand[0]], basis[cand[1]]]
        if _rank3(trial, K):
            return trial
    raise DegenerateIntersection("point does not span the plane")


def _rank3(vecs, K) -> bool:
    m = [list(v) for v in vecs]
    rank = 0
    for col in range(5):
        piv = next((r for r in range(rank, len(m)) if not md._is_zero_like(m[r][col])), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = md._inv_any(m[rank][col])
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and not md._is_zero_like(m[r][col]):
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank == 3


def _conic_parametrization(form, through: ProjectivePoint, K, tweak: int = 0):
    """Rational parametrization of {H1 = form = H2 = 0} through the point.

    Returns x(t): five polynomials of degree <= 2 over K, plus the parameter
    value t_W of the base point (the tangent direction).  ``tweak`` shears
    the plane basis so the point at t = infinity can be moved off the curve.
    """
    n1, n2, n3 = _plane_basis(form, through, K)
    if tweak:
        # move the t = infinity direction (the n3 ray) off the curve
        n3 = [a + b * tweak for a, b in zip(n3, n2)]

    def xofy(y):
        return [y[0] * n1[i] + y[1] * n2[i] + y[2] * n3[i] for i in range(5)]

    def Q(y):
        return sum(v * v for v in xofy(y))

    def bil(y, z):
        return (Q([a + b for a, b in zip(y, z)]) - Q(y) - Q(z)) / 2

    e1 = [K.one(), K(0), K(0)]
    L0 = 2 * bil(e1, [K(0), K.one(), K(0)])
    L1 = 2 * bil(e1, [K(0), K(0), K.one()])
    M0 = Q([K(0), K.one(), K(0)])
    M1 = 2 * bil([K(0), K.one(), K(0)], [K(0), K(0), K.one()])
    M2 = Q([K(0), K(0), K.one()])
    if md._is_zero_like(L1):
        raise DegenerateIntersection("tangent direction at infinity; permute basis")
    # point at parameter t: y(t) = M(t) e1 - L(t) (0, 1, t)
    y1 = [M0, M1, M2]
    y2 = [-L0, -L1, K(0)]
    y3 = [K(0), -L0, -L1]
    xpolys = []
    for i in range(5):
        xpolys.append([y1[d] * n1[i] + y2[d] * n2[i] + y3[d] * n3[i] for d in range(3)])
    t_w = -L0 / L1
    return xpolys, t_w


def plane_divisor(form, through: ProjectivePoint | None = None, K=None) -> dict:
    """Intersection divisor of the hyperplane with the canonical curve.

    Exact route (a known curve point on the plane is required): parametrize
    the conic {H1 = form = H2 = 0} through the point and factor the restricted
    cubic H3, a degree-6 binary form.  Returns the parameter-space
    factorization and the resulting points where they are rational.
    """
    if through is None:
        raise DegenerateIntersection("exact route requires a known point on the plane")
    K = K or QAB
    C = None
    for tweak in range(12):
        try:
            xpolys, t_w = _conic_parametrization(form, through, K, tweak)
        except DegenerateIntersection:
            continue
        # C(t) = H3(x(t)), degree 6 unless a contact point sits at t = inf
        C = [K(0)]
        for i in range(5):
            sq = _polmul(xpolys[i], xpolys[i], K)
            cu = _polmul(sq, xpolys[i], K)
            C = _poladd(C, cu, K)
        C = up.trim(C)
        if up.degree(C) == 6:
            break
    if C is None or up.degree(C) != 6:
        raise DegenerateIntersection("restricted cubic degenerates for all shears")
    mult_w = 0
    rem = C
    while True:
        quot, r = up.divmod_poly(rem, [-t_w, K.one()])
        if up.trim(r):
            break
        rem = quot
        mult_w += 1
    return {"xpolys": xpolys, "t_point": t_w, "multiplicity_at_point": mult_w,
            "residual": rem, "field": K}


def plane_divisor_multiplicities(plane: TritangentPlane) -> list[int]:
    """Contact multiplicities of a tritangent plane at its three points."""
    labels = plane.divisor_labels()
    out = []
    for lab in labels:
        if isinstance(lab, GeometricPointLabel):
            pt = lab.point()
            K = QAB
        else:
            signc, i, j, k = lab
            pt = o_point(+1 if signc == "O+" else -1, i, j, k)
            K = QAB15
        res = plane_divisor(list(plane.form), pt, K)
        out.append(res["multiplicity_at_point"])
    return out


def _polmul(p, q, K):
    out = [K(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _poladd(p, q, K):
    n = max(len(p), len(q))
    out = [K(0)] * n
    for i, a in enumerate(p):
        out[i] = out[i] + a
    for i, b in enumerate(q):
        out[i] = out[i] + b
    return out


# ---------------------------------------------------------------------------
# osculating planes


def _local_series_at_w(label: GeometricPointLabel, order: int = 8):
    """Exact local series of the curve at a Weierstrass point, over QAB.

    Chart: the first 1-coordinate is frozen to 1, the second is 1 + t; the
    positions of alpha and beta become series, the gamma slot is eliminated
    through H1."""
    i, j, k = label.data
    ones = sorted(set(range(5)) - {i, j, k})
    chart, par = ones
    K = QAB
    a, b, g = K(ALPHA), BETA, GAMMA
    zero, one = K(0), K.one()

    def pad(pol):
        return list(pol) + [zero] * (order - len(pol))

    series = {chart: pad([one]), par: pad([one, one]), i: None, j: None}
    xi = pad([a])
    xj = pad([b])
    jac = [[2 * a - 2 * g, 2 * b - 2 * g],
           [3 * a * a - 3 * g * g, 3 * b * b - 3 * g * g]]
    det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]
    inv = [[jac[1][1] / det, -jac[0][1] / det], [-jac[1][0] / det, jac[0][0] / det]]
    for n in range(1, order):
        xs = _assemble(series, chart, par, i, j, xi, xj, order, K)
        h2 = _series_hk(xs, 2, order, K)
        h3 = _series_hk(xs, 3, order, K)
        d0 = inv[0][0] * h2[n] + inv[0][1] * h3[n]
        d1 = inv[1][0] * h2[n] + inv[1][1] * h3[n]
        xi[n] = xi[n] - d0
        xj[n] = xj[n] - d1
    xs = _assemble(series, chart, par, i, j, xi, xj, order, K)
    h2 = _series_hk(xs, 2, order, K)
    h3 = _series_hk(xs, 3, order, K)
    if any(not md._is_zero_like(c) for c in h2) or any(not md._is_zero_like(c) for c in h3):
        raise ContactOrderUnexpected("local series at W failed to converge")
    return xs


def _assemble(series, chart, par, i, j, xi, xj, order, K):
    out = [None] * 5
    out[chart] = series[chart]
    out[par] = series[par]
    out[i] = xi
    out[j] = xj
    k = next(m for m in range(5) if out[m] is None)
    acc = [K(0)] * order
    for m in range(5):
        if m == k:
            continue
        for d in range(order):
            acc[d] = acc[d] + out[m][d]
    out[k] = [-c for c in acc]
    return out


def _series_hk(xs, kpow, order, K):
    acc = [K(0)] * order
    for s in xs:
        p = s
        for _ in range(kpow - 1):
            p = _sermul(p, s, order, K)
        for d in range(order):
            acc[d] = acc[d] + p[d]
    return acc


def _sermul(a, b, order, K):
    out = [K(0)] * order
    for i, ai in enumerate(a[:order]):
        if md._is_zero_like(ai):
            continue
        for j, bj in enumerate(b[:order - i]):
            out[i + j] = out[i + j] + ai * bj
    return out


def osculating_data(label: GeometricPointLabel) -> dict:
    """Osculating plane at a Weierstrass point and its residual pair.

    The plane is cut to vanish to order 3 on the local series; order 4 is
    then checked (the stall property).  The intersection divisor is
    4 W + P + P'; the first coordinates of P, P' (normalized to last
    coordinate 1 for W(3,4,5)) satisfy an exact quadratic over QAB.
    """
    K = QAB
    xs = _local_series_at_w(label, order=8)
    rows = [[xs[i][d] for i in range(5)] for d in range(3)]
    rows.append([K.one()] * 5)
    # solve rows . c = 0 with a pivoted elimination (c normalized mod scaling)
    c = _nullvector(rows, K)
    contact = [sum(c[i] * xs[i][d] for i in range(5)) for d in range(8)]
    orders = [md._is_zero_like(v) for v in contact]
    if not all(orders[:4]) or orders[4]:
        raise ContactOrderUnexpected(f"contact orders {orders}")
    div = plane_divisor(c, label.point(), K)
    if div["multiplicity_at_point"] != 4:
        raise ContactOrderUnexpected("osculating divisor multiplicity is not 4")
    quad = div["residual"]
    if up.degree(quad) != 2:
        raise ContactOrderUnexpected("residual is not a quadratic")
    # first coordinates of P, P' normalized to x5 = 1: delta(t) = x1(t)/x5(t)
    xpolys = div["xpolys"]
    qa, qb, qc = quad[2], quad[1], quad[0]
    s_t = -qb / qa          # t1 + t2
    p_t = qc / qa           # t1 t2
    num, den = xpolys[0], xpolys[4]
    dsum, dprod = _ratio_symmetric(num, den, s_t, p_t, K)
    return {"plane": c, "t_quadratic": (qa, qb, qc), "delta_sum": dsum,
            "delta_product": dprod, "divisor_degree": 6,
            "xpolys": xpolys, "field": K}


def _ratio_symmetric(num, den, s, p, K):
    """Sum and product of num(t)/den(t) over the two roots of a quadratic
    with root sum s and product p; exact, using resultants of degree 2."""
    def ev(poly, t):  # symbolic evaluation helpers on power sums
        raise NotImplementedError

    # num(t) = n0 + n1 t + n2 t^2, likewise den
    n = list(num) + [K(0)] * (3 - len(num))
    d = list(den) + [K(0)] * (3 - len(den))
    # values: N_i = num(t_i), D_i = den(t_i); want N1/D1 + N2/D2 and product
    # N1 N2, D1 D2, N1 D2 + N2 D1 are symmetric: compute via power sums
    e1, e2 = s, p
    def sym_prod(a, b):
        # a(t1) b(t2) + a(t2) b(t1) for quadratics a, b
        # = sum_{i,j} a_i b_j (t1^i t2^j + t1^j t2^i)
        out = K(0)
        for i in range(3):
            for j in range(3):
                out = out + a[i] * b[j] * _power_sym(i, j, e1, e2, K)
        return out

    def val_prod(a, b):
        # a(t1) b(t1) a-> product over both roots of a and b? not needed
        raise NotImplementedError

    N1N2 = _sym_values_product(n, e1, e2, K)
    D1D2 = _sym_values_product(d, e1, e2, K)
    ND_cross = sym_prod(n, d)  # N1 D2 + N2 D1
    if md._is_zero_like(D1D2):
        raise DegenerateIntersection("residual points at infinity of the chart")
    return ND_cross / D1D2, N1N2 / D1D2


def _power_sym(i, j, e1, e2, K):
    """t1^i t2^j + t1^j t2^i (counting (i=j) twice) via Newton's identities."""
    if i == j:
        prod_pow = _e2_pow(e2, i, K)
        return 2 * prod_pow
    lo, hi = min(i, j), max(i, j)
    # t1^i t2^j + t1^j t2^i = (t1 t2)^lo (t1^(hi-lo) + t2^(hi-lo))
    return _e2_pow(e2, lo, K) * _newton_power(hi - lo, e1, e2, K)


def _e2_pow(e2, k, K):
    out = K.one()
    for _ in range(k):
        out = out * e2
    return out


def _newton_power(k, e1, e2, K):
    if k == 0:
        return K(2)
    p_prev, p_cur = K(2), e1
    for _ in range(k - 1):
        p_prev, p_cur = p_cur, e1 * p_cur - e2 * p_prev
    return p_cur


def _sym_values_product(a, e1, e2, K):
    """a(t1) a(t2) for a quadratic a, symmetric in the roots."""
    out = K(0)
    for i in range(3):
        out = out + a[i] * a[i] * _e2_pow(e2, i, K)
    for i in range(3):
        for j in range(i + 1, 3):
            out = out + a[i] * a[j] * _power_sym(i, j, e1, e2, K)
    return out


def stated_delta_quadratic():
    """The catalogued quadratic for W(3,4,5): monic x^2 - S x + P."""
    a = QAB(ALPHA)
    b = BETA
    S = ((11 * a + 12) * b + 4 * (3 * a + 2)) / 14
    P = (23 * (155 * a + 388) * b + 92 * (97 * a + 172)) / 6272
    return S, P


# ---------------------------------------------------------------------------
# odd characteristic orbits (combinatorial)


def odd_orbit_partition() -> dict:
    """S5-orbits of the 120 tritangent labels with stabilizers."""
    group = sym.enumerate_group()
    labels = [(CLASS1, p.label) for p in all_tritangent_planes() if p.plane_class == CLASS1]
    labels += [(CLASS2, p.label) for p in all_tritangent_planes() if p.plane_class == CLASS2]

    def act(perm, lab):
        cls, data = lab
        if cls == CLASS1:
            r, j, k = data
            return (cls, (r, perm[j], perm[k]))
        i, j, k = data
        return (cls, (perm[i], perm[j], perm[k]))

    remaining = set(labels)
    orbits = []
    while remaining:
        seed = sorted(remaining, key=str)[0]
        orbit = {act(p, seed) for p in group}
        stab = [p for p in group if act(p, seed) == seed]
        orbits.append({"seed": seed, "size": len(orbit), "stabilizer_order": len(stab),
                       "stabilizer": stab})
        remaining -= orbit
    orbits.sort(key=lambda o: (o["size"], str(o["seed"])))
    return {"orbits": orbits, "sizes": sorted(o["size"] for o in orbits),
            "total": sum(o["size"] for o in orbits)}


# ---------------------------------------------------------------------------
# Weierstrass x-coordinates in the plane model

WEIERSTRASS_X_POLYS = [
    [  # degree 12
        -64, 768, -2624, 3200, -2000, 1728, -936, 48, 100, -200, -114, -32, 1,
    ],
    [  # degree 24
        4096, 65536, 454656, 1355776, 2200576, 2543616, 5856256, 3838976,
        3357696, 5584896, 1560576, 1238016, 2603136, 992256, 837856, 831616,
        43056, -41824, -5704, -32704, 10096, -2864, 1306, -24, 1,
    ],
    [  # degree 24
        4096, -16384, 229376, 45056, 1099776, 3055616, 3303936, -2018304,
        -3572224, -584704, 3512576, 1034496, -625344, -1985664, 339456,
        431616, 304736, -211904, 12776, 36096, -3904, -1784, 1176, 56, 1,
    ],
]


def weierstrass_x_check(prec: int | None = None) -> dict:
    """Match the 60 transported Weierstrass x-coordinates against the roots
    of the three catalogued polynomials (degrees 12, 24, 24)."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec):
        tol = mp.mpf(2) ** (-prec // 2)
        xs = []
        for lab in catalog(WEIERSTRASS):
            hc = md.transport(lab.point().numeric(prec), src=md.P4, dst=md.HC)
            hcn = hc.normalized()
            X, Y, Z = hcn.coords
            xs.append(X / Z)
        roots = []
        for poly in WEIERSTRASS_X_POLYS:
            rts = mp.polyroots([mp.mpf(c) for c in reversed(poly)],
                               extraprec=prec, maxsteps=500)
            roots.extend(rts)
        if len(roots) != 60:
            raise UnmatchedRoot("expected 60 catalogued roots")
        used = [False] * 60
        worst = mp.mpf(0)
        for x in xs:
            best, bestd = None, None
            for i, r in enumerate(roots):
                if used[i]:
                    continue
                d2 = abs(x - r)
                if bestd is None or d2 < bestd:
                    best, bestd = i, d2
            if bestd > tol:
                raise UnmatchedRoot(f"x = {mp.nstr(x, 20)} unmatched ({mp.nstr(bestd, 3)})")
            used[best] = True
            worst = max(worst, bestd)
        # backward-relative polynomial residuals at the transported coordinates
        worst_res = mp.mpf(0)
        for x in xs:
            rel = []
            for p in WEIERSTRASS_X_POLYS:
                val = abs(mp.polyval([mp.mpf(c) for c in reversed(p)], x))
                scale = mp.fsum(abs(c) * abs(x) ** i for i, c in enumerate(p))
                rel.append(val / scale)
            worst_res = max(worst_res, min(rel))
        return {"matched": True, "max_match_error": mp.nstr(worst, 5),
                "max_poly_residual": mp.nstr(worst_res, 5),
                "degrees": [len(p) - 1 for p in WEIERSTRASS_X_POLYS]}


def _nullvector(rows, K):
    """A nonzero solution of rows . c = 0 (4 independent rows, 5 unknowns)."""
    m = [list(r) for r in rows]
    ncols = 5
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if not md._is_zero_like(m[r][col])), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = md._inv_any(m[rank][col])
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and not md._is_zero_like(m[r][col]):
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    free = next(c for c in range(ncols) if c not in pivots)
    sol = [K(0)] * ncols
    sol[free] = K.one()
    for r, col in enumerate(pivots):
        sol[col] = -m[r][free]
    return sol
