"""Period matrix, Abel-Jacobi map, and the Riemann constant vector.

The differential basis is v_i = phi_i(x, y) dx / f_y with
phi = (y^3 - x, y^2 x - 1, y - x^2, y(x^2 - y)); integrals run along the
homology edges (one Gauss-Legendre quadrature per path primitive, sheets
polished by Newton from the continuation samples) and along hub-to-point
paths for the Abel-Jacobi map.  Paths into the four catalogued places enter
through the exact local series, where the pulled-back differentials are
analytic.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .. import models as md
from ..errors import (
    AmbiguousCandidate,
    IntegrationNotConverged,
    NoCandidate,
    PathThroughBranchPoint,
    RoundingNotIntegral,
)
from . import curve as cv
from .homology import HomologyData, build_homology


def phi_values(x, y):
    return [y ** 3 - x, y ** 2 * x - 1, y - x ** 2, y * (x ** 2 - y)]


def integrand(x, y):
    fy = cv.fy_affine(x, y)
    return [p / fy for p in phi_values(x, y)]


@dataclass
class PeriodData:
    prec: int
    hom: HomologyData
    big_matrix: "mp.matrix"            # 4 x 8, unnormalised periods
    tau: "mp.matrix"                   # 4 x 4 normalized Riemann matrix
    a_block: "mp.matrix"
    b_block: "mp.matrix"
    edge_integrals: dict
    base_vector: list                  # AJ integral hub -> base place a


_GL_RULE = None


def _gl_nodes(degree, prec):
    global _GL_RULE
    from mpmath.calculus.quadrature import GaussLegendre
    if _GL_RULE is None:
        _GL_RULE = GaussLegendre(mp.mp)
    return _GL_RULE.get_nodes(mp.mpf(0), mp.mpf(1), prec, degree)


def _gl_integrate_vector(f, prec, maxdeg):
    """Vector-valued Gauss-Legendre on [0, 1] with degree doubling."""
    prev = None
    for degree in range(4, maxdeg + 1):
        nodes = _gl_nodes(degree, prec)
        acc = None
        for x, w in nodes:
            fx = f(x)
            if acc is None:
                acc = [w * v for v in fx]
            else:
                for i, v in enumerate(fx):
                    acc[i] += w * v
        if prev is not None:
            err = max(abs(a - b) for a, b in zip(acc, prev))
            scale = max(abs(a) for a in acc) + 1
            if err < mp.mpf(2) ** (-prec + 12) * scale:
                return acc, err
        prev = acc
    raise IntegrationNotConverged(f"Gauss-Legendre stalled at degree {maxdeg}")


def _integrate_primitive(pc: cv.PlaneCurve, prim, sample_lookup, prec):
    """Integral of the four differentials over one path primitive.

    The primitive is pre-split so each piece is shorter than twice its
    clearance from the singular fibers (Bernstein parameter >= 2, giving
    at least 3.5 bits per Gauss-Legendre node); each piece is evaluated at
    two consecutive degrees and subdivided if they disagree."""
    nodes_needed = prec // 3 + 10
    degree = 3
    while 3 * 2 ** (degree - 1) < nodes_needed:
        degree += 1

    def quad_piece(t0, t1, depth=0):
        def f(u):
            t = t0 + (t1 - t0) * u
            x = prim.at(t)
            y = pc.refine_sheet(x, sample_lookup(t))
            dx = prim.deriv(t) * (t1 - t0)
            return [v * dx for v in integrand(x, y)]

        lo = None
        for d in (degree, degree + 1):
            nodes = _gl_nodes(d, prec)
            acc = None
            for xnode, w in nodes:
                fx = f(xnode)
                if acc is None:
                    acc = [w * v for v in fx]
                else:
                    for i, v in enumerate(fx):
                        acc[i] += w * v
            if lo is None:
                lo = acc
            else:
                err = max(abs(a - b) for a, b in zip(acc, lo))
                scale = max(abs(a) for a in acc) + 1
                if err < mp.mpf(2) ** (-prec + 12) * scale:
                    return acc
        if depth > 12:
            raise IntegrationNotConverged("piece subdivision exhausted")
        mid = (t0 + t1) / 2
        left = quad_piece(t0, mid, depth + 1)
        right = quad_piece(mid, t1, depth + 1)
        return [a + b for a, b in zip(left, right)]

    # geometric pre-split: sample clearance along the primitive
    probes = [prim.at(mp.mpf(k) / 8) for k in range(9)]
    clearance = min(pc.dist_to_singular(x) for x in probes)
    total_len = abs(prim.deriv(mp.mpf("0.5")))
    pieces = max(1, int(float(total_len / (2 * clearance))) + 1)
    out = [mp.mpc(0)] * 4
    for k in range(pieces):
        t0 = mp.mpf(k) / pieces
        t1 = mp.mpf(k + 1) / pieces
        vals = quad_piece(t0, t1)
        out = [a + b for a, b in zip(out, vals)]
    return out


def _edge_integral(pc: cv.PlaneCurve, hom: HomologyData, edge_key, prec):
    edge = hom.edges[edge_key]
    loop = pc.loop_around(edge.branch_index)
    samples = edge.samples
    out = [mp.mpc(0)] * 4
    for pi, prim in enumerate(loop.prims):
        local = [(t, y) for (p, t, x, y) in samples if p == pi]
        if not local:
            prev = [(t, y) for (p, t, x, y) in samples if p < pi]
            anchor = prev[-1][1] if prev else samples[0][3]
            local = [(mp.mpf(0), anchor), (mp.mpf(1), anchor)]

        def lookup(t, loc=local):
            best, bd = None, None
            for ts, ys in loc:
                d = abs(ts - t)
                if bd is None or d < bd:
                    best, bd = ys, d
            return best

        vals = _integrate_primitive(pc, prim, lookup, prec)
        out = [a + b for a, b in zip(out, vals)]
    return out


def compute_periods(prec: int | None = None, hom: HomologyData | None = None,
                    progress=None) -> PeriodData:
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 30):
        if hom is None:
            pc = cv.PlaneCurve(prec)
            hom = build_homology(pc, progress=progress)
        pc = hom.curve
        needed = sorted({e for cyc in hom.sympl_basis for e in cyc})
        integrals = {}
        for e in needed:
            integrals[e] = _edge_integral(pc, hom, e, prec)
            if progress:
                progress(f"edge integral {e}")
        big = mp.matrix(4, 8)
        for k, cyc in enumerate(hom.sympl_basis):
            for e, mult in cyc.items():
                vec = integrals[e]
                for i in range(4):
                    big[i, k] += mult * vec[i]
        A = big[:, :4]
        B = big[:, 4:]
        tau = A ** -1 * B
        sym_err = max(abs(tau[i, j] - tau[j, i]) for i in range(4) for j in range(4))
        if sym_err > mp.mpf(2) ** (-prec // 2):
            raise IntegrationNotConverged(f"tau not symmetric: {mp.nstr(sym_err, 5)}")
        if not _im_posdef(tau):
            # flip the orientation of the b-cycles
            for k in range(4):
                hom.sympl_basis[k], hom.sympl_basis[k + 4] = (
                    hom.sympl_basis[k + 4], hom.sympl_basis[k])
            big = mp.matrix(4, 8)
            for k, cyc in enumerate(hom.sympl_basis):
                for e, mult in cyc.items():
                    vec = integrals[e]
                    for i in range(4):
                        big[i, k] += mult * vec[i]
            # swapping a and b blocks inverts the intersection sign; negate b
            for k in range(4):
                for i in range(4):
                    big[i, 4 + k] = -big[i, 4 + k]
            for k in range(4):
                cycb = hom.sympl_basis[4 + k]
                hom.sympl_basis[4 + k] = {e: -m for e, m in cycb.items()}
            A = big[:, :4]
            B = big[:, 4:]
            tau = A ** -1 * B
            if not _im_posdef(tau):
                raise IntegrationNotConverged("Im tau not positive definite")
        base_vec = _base_place_vector(pc, prec)
        return PeriodData(prec, hom, big, tau, A, B, integrals, base_vec)


def _im_posdef(tau) -> bool:
    im = mp.matrix(4)
    for i in range(4):
        for j in range(4):
            im[i, j] = mp.im(tau[i, j])
    try:
        mp.cholesky(im)
        return True
    except Exception:
        return False


def riemann_relation_residuals(pd: PeriodData):
    """|Pi J Pi^T| and the smallest eigenvalue of i Pi J Pi^H."""
    J = mp.matrix(8)
    for i in range(4):
        J[i, 4 + i] = 1
        J[4 + i, i] = -1
    E = pd.big_matrix * J * pd.big_matrix.T
    bilinear = max(abs(E[i, j]) for i in range(4) for j in range(4))
    H = 1j * pd.big_matrix * J * pd.big_matrix.H
    Hs = (H + H.H) / 2
    eigs = mp.eigsy(mp.matrix([[mp.re(Hs[i, j]) for j in range(4)] for i in range(4)]),
                    eigvals_only=True) if False else None
    # positive definiteness via Cholesky of the Hermitian part
    try:
        mp.cholesky(Hs)
        posdef = True
    except Exception:
        posdef = False
    return bilinear, posdef


# ---------------------------------------------------------------------------
# Abel-Jacobi


SPECIAL_T1 = {"a": mp.mpf("0.12"), "b": mp.mpf("0.12"),
              "c": mp.mpf("0.4"), "d": mp.mpf("0.4")}


def _series_chart_integral(tag: str, t1, prec):
    """Integral of the pulled-back differentials from the place to series
    parameter t1, plus the (x, y) endpoint."""
    par = md.SPECIAL_PARAMETRIZATIONS[tag]
    X, Y, Z = par.series

    def coords(t):
        xv = _ser_eval_num(X, t, prec)
        yv = _ser_eval_num(Y, t, prec)
        zv = _ser_eval_num(Z, t, prec)
        return xv / zv, yv / zv

    def f(t):
        x, y = coords(t)
        dx = _ser_eval_num(_d_ratio(X, Z), t, prec) / _ser_eval_num(Z, t, prec) ** 2
        vals = integrand(x, y)
        return mp.matrix([v * dx for v in vals])

    maxdeg = max(7, prec // 44 + 5)
    val, err = mp.quad(f, [0, t1], error=True, maxdegree=maxdeg)
    if err > mp.mpf(2) ** (-prec + 16) * (mp.norm(val) + 1):
        raise IntegrationNotConverged(f"series-chart quadrature at {tag}")
    x1, y1 = coords(t1)
    return [val[i] for i in range(4)], (x1, y1)


_D_RATIO_CACHE = {}


def _d_ratio(X, Z):
    """Numerator series of d(X/Z): X' Z - X Z'."""
    key = (tuple(X), tuple(Z))
    if key not in _D_RATIO_CACHE:
        n = len(X)
        dX = [c * (i + 1) for i, c in enumerate(X[1:])] + [X[0] * 0]
        dZ = [c * (i + 1) for i, c in enumerate(Z[1:])] + [X[0] * 0]
        prod1 = _ser_mul_plain(dX, list(Z), n)
        prod2 = _ser_mul_plain(list(X), dZ, n)
        _D_RATIO_CACHE[key] = [a - b for a, b in zip(prod1, prod2)]
    return _D_RATIO_CACHE[key]


def _ser_mul_plain(a, b, n):
    out = [a[0] * 0] * n
    for i, ai in enumerate(a[:n]):
        for j, bj in enumerate(b[:n - i]):
            out[i + j] = out[i + j] + ai * bj
    return out


def _ser_eval_num(series, t, prec):
    acc = mp.mpc(0)
    for c in reversed(list(series)):
        acc = acc * t + md._numeric_coord(c, prec)
    return acc


def _hub_to_xy_integral(pc: cv.PlaneCurve, x_target, y_target, prec):
    """Integral of the differentials from the hub to (x, y) on its sheet."""
    x_target = mp.mpc(x_target)
    path = _path_hub_to(pc, x_target)
    samples = []

    def record(pi, t, x, ys):
        samples.append((pi, t, x, list(ys)))

    end_fiber = pc.continue_fiber(path, record=record)
    sheet = None
    for i, y in enumerate(end_fiber):
        if abs(y - y_target) < cv._min_separation(end_fiber) / 3:
            sheet = i
            break
    if sheet is None:
        raise PathThroughBranchPoint(
            f"target sheet not found at x = {mp.nstr(x_target, 8)}")
    out = [mp.mpc(0)] * 4
    for pi, prim in enumerate(path.prims):
        local = [(t, ys[sheet]) for (p, t, x, ys) in samples if p == pi]
        if not local:
            continue

        def lookup(t, loc=local):
            best, bd = None, None
            for ts, ysv in loc:
                d = abs(ts - t)
                if bd is None or d < bd:
                    best, bd = ysv, d
            return best

        vals = _integrate_primitive(pc, prim, lookup, prec)
        out = [a + b for a, b in zip(out, vals)]
    return out, end_fiber[sheet]


def _path_hub_to(pc: cv.PlaneCurve, x_target) -> cv.Path:
    if abs(x_target) <= mp.mpf("1.9"):
        return pc.path_to(x_target)
    # far targets: radial from the ring, joined at the hub angle
    a_t = mp.arg(x_target)
    R = mp.mpf("2.0")
    joint = R * mp.e ** (1j * mp.arg(pc.hub))
    outer = R * mp.e ** (1j * a_t)
    p1 = pc.path_to(joint)
    da = a_t - mp.arg(pc.hub)
    while da <= -mp.pi:
        da += 2 * mp.pi
    while da > mp.pi:
        da -= 2 * mp.pi
    p2 = cv.Path([cv.Arc(mp.mpc(0), R, mp.arg(pc.hub), mp.arg(pc.hub) + da)])
    p3 = cv.Path([cv.Segment(outer, x_target)])
    return p1 + p2 + p3


def _base_place_vector(pc: cv.PlaneCurve, prec):
    """AJ integral from the hub to the base place a = [0:0:1]."""
    ser, (x1, y1) = _series_chart_integral("a", SPECIAL_T1["a"], prec)
    hub_part, _ = _hub_to_xy_integral(pc, x1, y1, prec)
    # hub -> (x1,y1) then backwards along the series to t=0: A(a) - A(hub)
    return [h - s for h, s in zip(hub_part, ser)]


def abel_jacobi_point(pd: PeriodData, point, prec: int | None = None):
    """Unnormalised AJ vector of a point relative to the base place a.

    ``point`` is either a branch tag ("a", "b", "c", "d"), an (x, y) pair on
    the plane model, or an exact/numeric ProjectivePoint on any model."""
    prec = prec or pd.prec
    pc = pd.hom.curve
    with mp.workprec(prec + 30):
        if isinstance(point, str):
            ser, (x1, y1) = _series_chart_integral(point, SPECIAL_T1[point], prec)
            hub_part, _ = _hub_to_xy_integral(pc, x1, y1, prec)
            vec = [h - s for h, s in zip(hub_part, ser)]
        else:
            if isinstance(point, md.ProjectivePoint):
                q = point if point.model == md.HC else md.transport(point, dst=md.HC)
                qn = q.numeric(prec).normalized()
                X, Y, Z = qn.coords
                if abs(Z) < mp.mpf(2) ** (-prec // 2):
                    raise PathThroughBranchPoint("point at x = infinity; use a tag")
                x, y = X / Z, Y / Z
            else:
                x, y = point
            vec, _ = _hub_to_xy_integral(pc, mp.mpc(x), mp.mpc(y), prec)
        return [v - b for v, b in zip(vec, pd.base_vector)]


def abel_jacobi_divisor(pd: PeriodData, entries, prec: int | None = None):
    """Sum of weighted AJ vectors; entries are (point-or-tag, multiplicity)."""
    out = [mp.mpc(0)] * 4
    for point, mult in entries:
        if mult == 0:
            continue
        vec = abel_jacobi_point(pd, point, prec)
        out = [a + mult * v for a, v in zip(out, vec)]
    return out


def divisor_entries(div: md.FormalDivisor):
    out = []
    for p, m in div.terms:
        if p.model == md.HC and p.branch_tag in ("a", "b", "c", "d"):
            out.append((p.branch_tag, m))
        else:
            out.append((p, m))
    return out


def normalized_vector(pd: PeriodData, vec):
    """Coordinates w.r.t. the normalized differentials: A^{-1} vec."""
    col = mp.matrix(4, 1)
    for i in range(4):
        col[i] = vec[i]
    return pd.a_block ** -1 * col


def reduce_mod_lattice(pd: PeriodData, vec, normalized: bool = False):
    """Reduce a vector modulo the period lattice; returns (reduced_normalized,
    distance_to_zero)."""
    z = normalized_vector(pd, vec) if not normalized else mp.matrix(
        [[vec[i]] for i in range(4)])
    tau = pd.tau
    # lattice Z^4 + tau Z^4 in normalized coordinates: solve real 8x8
    Mre = mp.matrix(8, 8)
    rhs = mp.matrix(8, 1)
    for i in range(4):
        for j in range(4):
            Mre[i, j] = 1 if i == j else 0
            Mre[i + 4, j] = 0
            Mre[i, j + 4] = mp.re(tau[i, j])
            Mre[i + 4, j + 4] = mp.im(tau[i, j])
        rhs[i] = mp.re(z[i])
        rhs[i + 4] = mp.im(z[i])
    coeffs = mp.lu_solve(Mre, rhs)
    ncoef = [mp.nint(coeffs[k]) for k in range(8)]
    red = mp.matrix(4, 1)
    for i in range(4):
        red[i] = z[i] - ncoef[i]
        for j in range(4):
            red[i] -= ncoef[4 + j] * tau[i, j]
    dist = mp.sqrt(mp.fsum(abs(red[i]) ** 2 for i in range(4)))
    return red, dist


def lattice_distance(pd: PeriodData, vec, normalized: bool = False):
    return reduce_mod_lattice(pd, vec, normalized)[1]
