"""j-invariants, the tau0 solve, the Schwarz-Christoffel constant, and the
Weber period-matrix pipeline."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import matrices as mats
from .errors import (
    NoRootInBracket,
    QuadratureNotConverged,
    RiemannRelationsFail,
    SingularModel,
)

J_TAU0 = Fraction(-5 * 29 ** 3, 2 ** 5)
J_5TAU0 = Fraction(-25, 2)
J_3TAU0 = Fraction(5 * 211 ** 3, 2 ** 15)
J_15TAU0 = Fraction(-(5 ** 2) * 241 ** 3, 2 ** 3)


# ---------------------------------------------------------------------------
# exact j-invariants


@dataclass(frozen=True)
class EllipticModel:
    """A genus-1 model: kind "weierstrass" takes (a1, a2, a3, a4, a6);
    kind "cubic" a plane curve y^2 = a x^3 + b x^2 + c x + d; kind
    "quartic" y^2 = quartic(x) with a designated rational root of the
    quartic (moved to infinity to reduce to a cubic)."""

    kind: str
    coeffs: tuple
    root: Fraction | None = None


def _b_invariants(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def j_weierstrass(a1, a2, a3, a4, a6) -> Fraction:
    a1, a2, a3, a4, a6 = (Fraction(v) for v in (a1, a2, a3, a4, a6))
    b2, b4, b6, b8 = _b_invariants(a1, a2, a3, a4, a6)
    c4 = b2 * b2 - 24 * b4
    disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise SingularModel("discriminant vanishes")
    return c4 ** 3 / disc


def j_cubic(a, b, c, d) -> Fraction:
    """j of y^2 = a x^3 + b x^2 + c x + d (a != 0)."""
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    if a == 0:
        raise SingularModel("cubic leading coefficient vanishes")
    # (a y)^2 = (a x)^3 + b (a x)^2 + a c (a x) + a^2 d
    return j_weierstrass(0, b, 0, a * c, a * a * d)


def j_quartic(coeffs, root) -> Fraction:
    """j of y^2 = quartic(x) given a rational root of the quartic.

    Shift the root to infinity: x = root + 1/t, w = y t^2 turns the curve
    into w^2 = cubic(t).
    """
    coeffs = [Fraction(v) for v in coeffs]  # c4 x^4 + ... + c0, highest first
    root = Fraction(root)
    if len(coeffs) != 5:
        raise SingularModel("expected five quartic coefficients")
    # q(root + 1/t) t^4 = sum coeffs[i] (root + 1/t)^(4-i) t^4
    t3 = [Fraction(0)] * 4  # cubic coefficients, highest first
    for i, cc in enumerate(coeffs):
        deg = 4 - i
        # (root + 1/t)^deg t^4 = sum_k C(deg,k) root^(deg-k) t^(4-k)
        from math import comb
        for k in range(deg + 1):
            power = 4 - k  # exponent of t
            term = cc * comb(deg, k) * root ** (deg - k)
            if power == 4:
                if term:
                    t3_4 = term
            else:
                t3[3 - power] += term
    qroot = sum(cc * root ** (4 - i) for i, cc in enumerate(coeffs))
    if qroot != 0:
        raise SingularModel("designated root is not a root of the quartic")
    return j_cubic(*t3)


def j_plane_cubic_with_flex(poly_coeffs: dict, flex: tuple, tangent: tuple) -> Fraction:
    """j of a ternary cubic with a known rational flex.

    ``poly_coeffs`` maps exponent triples to rationals; ``flex`` is the flex
    point, ``tangent`` the coefficients of its tangent line.  The coordinate
    change puts the flex at [0:1:0] with tangent {Z = 0}; the result is then
    collected into long Weierstrass form.
    """
    from .multipoly import MPoly
    cubic = MPoly(3, {e: Fraction(c) for e, c in poly_coeffs.items()})
    fx, fy, fz = (Fraction(v) for v in flex)
    t1, t2, t3 = (Fraction(v) for v in tangent)
    # new coords: Z' = tangent, Y' = a line through nothing special, X' = another;
    # require the change of basis to be invertible and send flex -> [0:1:0]
    base = [[t1, t2, t3]]
    for cand in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
        trial = base + [[Fraction(v) for v in cand]]
        if _rank(trial) == len(trial):
            base = trial
        if len(base) == 3:
            break
    Zp, Xp, Yp = base  # rows: Z' first, then two complements
    Mrows = [Xp, Yp, Zp]
    Minv = _mat_inv_frac(Mrows)
    # ensure flex maps to [0:1:0]: its new coords are M . flex
    newflex = [sum(Mrows[i][j] * (fx, fy, fz)[j] for j in range(3)) for i in range(3)]
    if newflex[2] != 0:
        raise SingularModel("tangent line does not pass through the flex")
    if newflex[1] == 0:
        Mrows = [Yp, Xp, Zp]
        Minv = _mat_inv_frac(Mrows)
        newflex = [sum(Mrows[i][j] * (fx, fy, fz)[j] for j in range(3)) for i in range(3)]
    # substitute old = Minv . new
    XN, YN, ZN = MPoly.variables(3)
    subs = []
    for i in range(3):
        subs.append(XN * Minv[i][0] + YN * Minv[i][1] + ZN * Minv[i][2])
    newcubic = cubic.subs(subs)
    # collect coefficients: c300 X^3 + ... ; flex at [0:1:0] with tangent Z=0
    def cf(e):
        return newcubic.coeff_of(e) or Fraction(0)
    if cf((0, 3, 0)) != 0 or cf((1, 2, 0)) != 0:
        raise SingularModel("flex normalization failed")
    cY2Z = cf((0, 2, 1))
    if cY2Z == 0:
        raise SingularModel("degenerate cubic at the flex")
    s = -1 / cY2Z
    a1 = s * cf((1, 1, 1))
    a3 = s * cf((0, 1, 2))
    A = s * cf((3, 0, 0))
    if A == 0:
        raise SingularModel("cubic misses the X^3 term after normalization")
    a2 = s * cf((2, 0, 1)) / A
    a4 = s * cf((1, 0, 2)) / A ** 2 * A
    a6 = s * cf((0, 0, 3)) * A
    # rescale to monic X^3: X -> X/A, Y -> Y/A etc. Standard: with
    # Y^2 Z + a1 XYZ + a3 Y Z^2 = A X^3 + B X^2 Z + C X Z^2 + D Z^3,
    # (X, Y) -> (X/A, Y/A) gives y^2 + a1 xy + a3 A y = x^3 + B x^2 + AC x + A^2 D
    B = s * cf((2, 0, 1))
    Cc = s * cf((1, 0, 2))
    D = s * cf((0, 0, 3))
    return j_weierstrass(a1, B, a3 * A, A * Cc, A * A * D)


def _rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def _mat_inv_frac(m):
    n = len(m)
    a = [list(map(Fraction, row)) + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def j_exact(model: EllipticModel) -> Fraction:
    if model.kind == "weierstrass":
        return j_weierstrass(*model.coeffs)
    if model.kind == "cubic":
        return j_cubic(*model.coeffs)
    if model.kind == "quartic":
        return j_quartic(model.coeffs, model.root)
    raise SingularModel(f"unknown model kind {model.kind}")


# ---------------------------------------------------------------------------
# numeric j via the q-expansion


_J_SERIES: list[int] = []


def _j_series(n: int) -> list[int]:
    """Coefficients c_0..c_{n-1} of j(q) = 1/q + sum c_k q^k (c_0 = 744)."""
    global _J_SERIES
    if len(_J_SERIES) >= n:
        return _J_SERIES[:n]
    N = n + 8
    sigma3 = [0] * N
    for d in range(1, N):
        for m in range(d, N, d):
            sigma3[m] += d ** 3
    e4 = [0] * N
    e4[0] = 1
    for k in range(1, N):
        e4[k] = 240 * sigma3[k]
    euler = [0] * N
    euler[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= N and g2 >= N:
            break
        sgn = -1 if k % 2 else 1
        if g1 < N:
            euler[g1] += sgn
        if g2 < N:
            euler[g2] += sgn
        k += 1

    def pmul(a, b):
        out = [0] * N
        for i, ai in enumerate(a):
            if not ai:
                continue
            lim = N - i
            for j2, bj in enumerate(b[:lim]):
                if bj:
                    out[i + j2] += ai * bj
        return out

    e2_ = pmul(euler, euler)
    e4_ = pmul(e2_, e2_)
    e8_ = pmul(e4_, e4_)
    e16_ = pmul(e8_, e8_)
    delta_over_q = pmul(e16_, e8_)  # eta-product^24 without the q factor
    inv = [0] * N
    inv[0] = 1
    for k in range(1, N):
        inv[k] = -sum(delta_over_q[j2] * inv[k - j2] for j2 in range(1, k + 1))
    e4cu = pmul(pmul(e4, e4), e4)
    jq = pmul(e4cu, inv)  # = q * j(q): coefficients of q^0 .. -> j = 1/q + ...
    _J_SERIES = jq[1:N - 7 + 1]
    # jq[0] must be 1 (the 1/q term), jq[1] = 744
    assert jq[0] == 1 and jq[1] == 744
    return _J_SERIES[:n]


def j_numeric(tau, prec: int | None = None):
    """j(tau) by the integer q-expansion, truncated so the tail is below
    2**(-prec) for Im tau bounded away from zero."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 40):
        tau = mp.mpc(tau)
        y = mp.im(tau)
        if y <= 0:
            raise ValueError("Im tau must be positive")
        qabs = mp.e ** (-2 * mp.pi * y)
        # need e^{4 pi sqrt n} qabs^n < 2^-prec; solve crudely
        n = 64
        target = (prec + 20) * mp.log(2)
        while 4 * mp.pi * mp.sqrt(n) - 2 * mp.pi * y * n > -target:
            n = int(n * 1.5) + 8
        coeffs = _j_series(n)
        q = mp.e ** (2j * mp.pi * tau)
        acc = mp.mpc(0)
        for c in reversed(coeffs):
            acc = acc * q + c
        return acc + 1 / q


def solve_tau0(prec: int | None = None):
    """The point on Re tau = -1/2 with j = -5*29^3/2^5 and Im near 0.19."""
    prec = prec or mp.mp.prec
    target = mp.mpf(J_TAU0.numerator) / J_TAU0.denominator

    def g(y):
        return mp.re(j_numeric(mp.mpc(-0.5, y), prec)) - target

    with mp.workprec(prec + 40):
        lo, hi = mp.mpf("0.15"), mp.mpf("0.23")
        glo, ghi = g(lo), g(hi)
        if glo * ghi > 0:
            raise NoRootInBracket("no sign change in [0.15, 0.23]")
        for _ in range(40):
            mid = (lo + hi) / 2
            gm = g(mid)
            if glo * gm <= 0:
                hi, ghi = mid, gm
            else:
                lo, glo = mid, gm
        y = (lo + hi) / 2
        h = mp.mpf(2) ** (-prec // 3)
        for _ in range(60):
            gy = g(y)
            if abs(gy) < mp.mpf(2) ** (-prec + 16):
                break
            dg = (g(y + h) - g(y - h)) / (2 * h)
            step = gy / dg
            y = y - step
            h = max(abs(step) / 4, mp.mpf(2) ** (-prec))
        return mp.mpc(mp.mpf(-1) / 2, y)


# ---------------------------------------------------------------------------
# the Schwarz-Christoffel constant l


def schwarz_l(prec: int | None = None):
    """The ratio of Schwarz-Christoffel integrals, about 0.848641.

    With I(a,b) = int (t-1)^(-1/5) t^(-3/5) (t+1)^(-4/5) dt the constant
    phases pull out and |I(-1,0)|, |I(-inf,-1)| become real integrals over
    (0,1) with algebraic endpoint singularities.  The 0.848641 anchor (and
    the period matrix built from it) corresponds to |I(-inf,-1)| / |I(-1,0)|;
    the displayed ratio in the source is the reciprocal.  Tanh-sinh
    quadrature with an error estimate; the hypergeometric closed form is an
    independent cross-check."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 30):
        fifth = mp.mpf(1) / 5
        half = mp.mpf(1) / 2
        cut = half ** fifth

        def smooth1(u):
            return (1 + u) ** (-fifth) * (1 - u) ** (-4 * fifth)

        def smooth2(w):
            return (1 + w) ** (-fifth) * (1 - w) ** (-4 * fifth)

        maxdeg = max(8, (prec // 40) + 6)
        tol = mp.mpf(2) ** (-prec + 10)

        def quad_checked(fn, a, b):
            val, err = mp.quad(fn, [a, b], error=True, maxdegree=maxdeg)
            if not mp.isfinite(val) or err > tol * max(1, abs(val)):
                raise QuadratureNotConverged(
                    f"quadrature error estimate {mp.nstr(err, 3)} too large")
            return val

        # u = s^5 absorbs u^(-3/5) at 0; 1 - u = v^5 absorbs (1-u)^(-4/5) at 1
        i1 = quad_checked(lambda s: 5 * s * smooth1(s ** 5), 0, cut)
        i1 += quad_checked(lambda v: 5 * (1 - v ** 5) ** (-3 * fifth)
                           * (2 - v ** 5) ** (-fifth), 0, cut)
        # w^(-2/5) at 0: w = s^5 gives 5 s^2; same absorption at 1
        i2 = quad_checked(lambda s: 5 * s ** 2 * smooth2(s ** 5), 0, cut)
        i2 += quad_checked(lambda v: 5 * (1 - v ** 5) ** (-2 * fifth)
                           * (2 - v ** 5) ** (-fifth), 0, cut)
        return i2 / i1


def schwarz_l_hypergeometric(prec: int | None = None):
    """Independent closed form: ratio of Beta * 2F1(..., -1) values."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 30):
        fifth = mp.mpf(1) / 5
        i1 = mp.beta(2 * fifth, fifth) * mp.hyp2f1(fifth, 2 * fifth, 3 * fifth, -1)
        i2 = mp.beta(3 * fifth, fifth) * mp.hyp2f1(fifth, 3 * fifth, 4 * fifth, -1)
        return i2 / i1


# ---------------------------------------------------------------------------
# Weber's period matrix


def weber_columns(l=None, branch: int = 0, prec: int | None = None):
    """The 4x8 matrix Omega = (A_0..A_3, B_0..B_3).

    ``branch`` selects the square-root branch of zeta^(3/2) (0: exp(3 pi i/5),
    1: the negative).  Columns for k = 0..4 sum to zero; only k = 0..3 enter.
    """
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 20):
        if l is None:
            l = schwarz_l(prec)
        z = mp.e ** (2j * mp.pi / 5)
        z32 = mp.e ** (3j * mp.pi / 5)
        if branch:
            z32 = -z32
        phi = (1 + mp.sqrt(mp.mpf(5))) / 2

        def colA(k):
            return [
                z ** k * (1 - z ** 2),
                z ** (2 * k) * z32 * (1 - z ** 4) * (l * phi - 1),
                z ** (4 * k + 3) * (1 - z ** 3) * phi * (1 - l),
                z ** (3 * k + 2) * (1 - z) * l,
            ]

        def colB(k):
            a = colA(k)
            return [a[1], a[2], a[3], a[0]]

        cols = [colA(k) for k in range(4)] + [colB(k) for k in range(4)]
        omega = mp.matrix(4, 8)
        for j2, col in enumerate(cols):
            for i in range(4):
                omega[i, j2] = col[i]
        return omega


def weber_column_sums(l=None, branch: int = 0, prec: int | None = None):
    """Entrywise sums over k = 0..4 of the A_k and of the B_k columns."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 20):
        if l is None:
            l = schwarz_l(prec)
        z = mp.e ** (2j * mp.pi / 5)
        z32 = mp.e ** (3j * mp.pi / 5)
        if branch:
            z32 = -z32
        phi = (1 + mp.sqrt(mp.mpf(5))) / 2
        sums_a = [mp.mpc(0)] * 4
        sums_b = [mp.mpc(0)] * 4
        for k in range(5):
            a = [
                z ** k * (1 - z ** 2),
                z ** (2 * k) * z32 * (1 - z ** 4) * (l * phi - 1),
                z ** (4 * k + 3) * (1 - z ** 3) * phi * (1 - l),
                z ** (3 * k + 2) * (1 - z) * l,
            ]
            b = [a[1], a[2], a[3], a[0]]
            for i in range(4):
                sums_a[i] += a[i]
                sums_b[i] += b[i]
        return sums_a, sums_b


def tau_from_big_period(omega, basis_change=None):
    """tau = A^{-1} B after an optional integer basis change (right action)."""
    if basis_change is not None:
        cm = mp.matrix(basis_change)
        omega = omega * cm
    A = omega[:, :4]
    B = omega[:, 4:]
    return A ** -1 * B


def weber_tau(l=None, prec: int | None = None):
    """tau_W from Omega and the canonicalizer C; tries both zeta^(3/2)
    branches and returns the one passing the Riemann relations."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 20):
        errs = []
        for branch in (0, 1):
            omega = weber_columns(l, branch, prec)
            tau = tau_from_big_period(omega, mats.C_CANONICALIZER)
            sym_err = max(abs(tau[i, j] - tau[j, i]) for i in range(4) for j in range(4))
            im = mp.matrix(4)
            for i in range(4):
                for j in range(4):
                    im[i, j] = mp.im(tau[i, j])
            try:
                mp.cholesky(im)
                posdef = True
            except Exception:
                posdef = False
            if sym_err < mp.mpf(2) ** (-prec // 4) and posdef:
                return tau, branch
            errs.append(sym_err)
        raise RiemannRelationsFail(f"neither branch works: {errs}")


def apply_symplectic_tau(tau, R):
    """tau' = (delta + tau gamma)^{-1} (beta + tau alpha) with the 8x8 blocks
    R = [[delta, beta], [gamma, alpha]]."""
    Rm = mp.matrix(R)
    delta = Rm[:4, :4]
    beta = Rm[:4, 4:]
    gamma = Rm[4:, :4]
    alpha = Rm[4:, 4:]
    return (delta + tau * gamma) ** -1 * (beta + tau * alpha)


def tau_b_reference(prec: int | None = None):
    """tau0 * M, the Riemann matrix in the reference basis."""
    prec = prec or mp.mp.prec
    tau0 = solve_tau0(prec)
    return tau0 * mp.matrix(mats.M_PERIOD), tau0


def multiplier_j_checks(prec: int | None = None) -> dict:
    """j at tau0, 3 tau0, 5 tau0, 15 tau0 against the exact rational targets."""
    prec = prec or mp.mp.prec
    tau0 = solve_tau0(prec)
    out = {}
    for mult, target in ((1, J_TAU0), (3, J_3TAU0), (5, J_5TAU0), (15, J_15TAU0)):
        val = j_numeric(mult * tau0, prec)
        tgt = mp.mpf(target.numerator) / target.denominator
        out[mult] = abs(val - tgt)
    return out
