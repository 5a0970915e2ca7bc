"""Integer symplectic machinery: LLL, equivalence of Riemann matrices, and
homology representations of automorphisms."""

from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath as mp

from .. import symmetry as sym
from ..errors import NotEquivalent, NotSymplectic, RoundingNotIntegral
from .periods import PeriodData


# ---------------------------------------------------------------------------
# LLL (integer basis, floating Gram-Schmidt)


def lll_reduce(basis: list[list[int]], delta: float = 0.99) -> list[list[int]]:
    """Lenstra-Lenstra-Lovasz reduction of integer row vectors."""
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n == 0:
        return b

    def dot(u, v):
        return mp.fsum(x * y for x, y in zip(u, v))

    def gramschmidt():
        star = []
        mu = [[mp.mpf(0)] * n for _ in range(n)]
        for i in range(n):
            vec = [mp.mpf(x) for x in b[i]]
            for j in range(i):
                denom = dot(star[j], star[j])
                mu[i][j] = dot([mp.mpf(x) for x in b[i]], star[j]) / denom
                vec = [x - mu[i][j] * y for x, y in zip(vec, star[j])]
            star.append(vec)
        return star, mu

    star, mu = gramschmidt()
    k = 1
    guard = 0
    while k < n:
        guard += 1
        if guard > 60000:
            break
        for j in range(k - 1, -1, -1):
            q = mp.nint(mu[k][j])
            if q:
                b[k] = [x - int(q) * y for x, y in zip(b[k], b[j])]
                star, mu = gramschmidt()
        lhs = dot(star[k], star[k])
        rhs = (delta - mu[k][k - 1] ** 2) * dot(star[k - 1], star[k - 1])
        if lhs >= rhs:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            star, mu = gramschmidt()
            k = max(k - 1, 1)
    return b


def integer_kernel_basis(rows: list[list], prec: int, rank_hint: int | None = None):
    """Integer vectors v with rows . v ~ 0, via a scaled LLL embedding.

    ``rows`` are real mpf rows (the linear system); returns short kernel
    vectors (exact integers) sorted by norm."""
    ncols = len(rows[0])
    scale = mp.mpf(2) ** (prec * 3 // 4)
    emb = []
    for i in range(ncols):
        v = [0] * i + [1] + [0] * (ncols - i - 1)
        tail = [int(mp.nint(scale * r[i])) for r in rows]
        emb.append(v + tail)
    red = lll_reduce(emb)
    out = []
    for row in red:
        head = row[:ncols]
        tail = row[ncols:]
        if any(head) and all(abs(t) < mp.mpf(2) ** (prec // 8) for t in tail):
            out.append(head)
    out.sort(key=lambda v: sum(x * x for x in v))
    return out


# ---------------------------------------------------------------------------
# symplectic equivalence of Riemann matrices


def _sp_blocks(g):
    m = [[int(g[i][j]) for j in range(8)] for i in range(8)]
    a = [row[:4] for row in m[:4]]
    b = [row[4:] for row in m[:4]]
    c = [row[:4] for row in m[4:]]
    d = [row[4:] for row in m[4:]]
    return a, b, c, d


def is_symplectic(mat) -> bool:
    J = [[0] * 8 for _ in range(8)]
    for i in range(4):
        J[i][4 + i] = 1
        J[4 + i][i] = -1
    # M^T J M == J
    mt = [[mat[j][i] for j in range(8)] for i in range(8)]
    JM = [[sum(J[i][k] * mat[k][j] for k in range(8)) for j in range(8)] for i in range(8)]
    MJM = [[sum(mt[i][k] * JM[k][j] for k in range(8)) for j in range(8)] for i in range(8)]
    return MJM == J


def apply_tau(mat, tau):
    """tau' = (a + tau c)^{-1} (b + tau d) for the 8x8 integer block matrix
    [[a, b], [c, d]] acting on the period columns (A|B) -> (A|B) M."""
    a, b, c, d = _sp_blocks(mat)
    am = mp.matrix(a)
    bm = mp.matrix(b)
    cm = mp.matrix(c)
    dm = mp.matrix(d)
    return (am + tau * cm) ** -1 * (bm + tau * dm)


def symplectic_equivalence(tau1, tau2, prec: int | None = None,
                           search_bound: int = 6, max_candidates: int = 100000):
    """An integer symplectic M with (a + tau1 c)^{-1}(b + tau1 d) = tau2.

    Solves the linearized equation b + tau1 d = (a + tau1 c) tau2 over the
    integers by lattice reduction, then tests short solutions for the exact
    symplectic property and invertibility."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 20):
        rows = []
        # unknown vector: entries of a, b, c, d (row-major, 64 ints)
        # equation per (i, j): b_ij + sum_k tau1_ik d_kj
        #                      - a_ik tau2_kj - sum_kl tau1_ik c_kl tau2_lj = 0
        for i in range(4):
            for j in range(4):
                coeff = [mp.mpc(0)] * 64
                for k in range(4):
                    coeff[16 + 4 * i + k] += 1 if k == j else 0
                for k in range(4):
                    coeff[48 + 4 * k + j] += tau1[i, k]
                for k in range(4):
                    coeff[0 + 4 * i + k] -= tau2[k, j]
                for k in range(4):
                    for l in range(4):
                        coeff[32 + 4 * k + l] -= tau1[i, k] * tau2[l, j]
                rows.append([mp.re(c) for c in coeff])
                rows.append([mp.im(c) for c in coeff])
        kernel = integer_kernel_basis(rows, prec)
        if not kernel:
            raise NotEquivalent("no integer solutions of the period relation")
        # search small combinations of the shortest kernel vectors
        kernel = kernel[:16]
        tried = 0
        for count in (1, 2, 3):
            for combo in itertools.combinations(range(len(kernel)), count):
                coeff_ranges = [range(-2, 3)] * count
                for cs in itertools.product(*coeff_ranges):
                    if all(c == 0 for c in cs):
                        continue
                    tried += 1
                    if tried > max_candidates:
                        raise NotEquivalent("candidate cap exceeded")
                    v = [0] * 64
                    for c, ki in zip(cs, combo):
                        if c:
                            for t in range(64):
                                v[t] += c * kernel[ki][t]
                    mat = [[v[16 * 0 + 4 * i + j] for j in range(4)] for i in range(4)]
                    matb = [[v[16 + 4 * i + j] for j in range(4)] for i in range(4)]
                    matc = [[v[32 + 4 * i + j] for j in range(4)] for i in range(4)]
                    matd = [[v[48 + 4 * i + j] for j in range(4)] for i in range(4)]
                    M = [mat[i] + matb[i] for i in range(4)] + \
                        [matc[i] + matd[i] for i in range(4)]
                    if not is_symplectic(M):
                        continue
                    try:
                        t2 = apply_tau(M, tau1)
                    except ZeroDivisionError:
                        continue
                    err = max(abs(t2[i, j] - tau2[i, j]) for i in range(4) for j in range(4))
                    if err < mp.mpf(2) ** (-prec // 4):
                        return M
        raise NotEquivalent("no symplectic solution within the search bound")


# ---------------------------------------------------------------------------
# homology representations


def homology_representation(pd: PeriodData, g: "sym.Automorphism",
                            tol: float = 1e-6):
    """The 8x8 integer matrix M with C_g Pi = Pi M for the exact analytic
    matrix C_g of the automorphism; raises if rounding exceeds ``tol``."""
    with mp.workprec(pd.prec + 20):
        C = sym.analytic_numeric(g, pd.prec)
        rhs = C * pd.big_matrix
        # solve Pi M = rhs: stack real and imaginary parts (8 x 8 real system
        # per column pair)
        Pi = pd.big_matrix
        Are = mp.matrix(8, 8)
        for i in range(4):
            for j in range(8):
                Are[i, j] = mp.re(Pi[i, j])
                Are[i + 4, j] = mp.im(Pi[i, j])
        M = [[0] * 8 for _ in range(8)]
        maxerr = mp.mpf(0)
        for col in range(8):
            b = mp.matrix(8, 1)
            for i in range(4):
                b[i] = mp.re(rhs[i, col])
                b[i + 4] = mp.im(rhs[i, col])
            sol = mp.lu_solve(Are, b)
            for k in range(8):
                r = mp.nint(sol[k])
                maxerr = max(maxerr, abs(sol[k] - r))
                M[k][col] = int(r)
        if maxerr > tol:
            raise RoundingNotIntegral(f"rounding residual {mp.nstr(maxerr, 4)}")
        if not is_symplectic(M):
            raise NotSymplectic("homology image is not symplectic")
        return M


def homology_generators(pd: PeriodData) -> dict[str, list[list[int]]]:
    gens = sym.generators()
    group = sym.enumerate_group()
    return {name: homology_representation(pd, group[gens[name].perm])
            for name in ("R", "S", "U")}


def close_matrix_group(gens: list[list[list[int]]], cap: int = 600):
    """Closure of integer matrices under multiplication (tuple-keyed)."""
    def key(m):
        return tuple(tuple(row) for row in m)

    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(8)) for j in range(8)]
                for i in range(8)]

    elems = {key(g): g for g in gens}
    ident = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
    elems[key(ident)] = ident
    frontier = list(elems.values())
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = mul(g, cur)
            k = key(nxt)
            if k not in elems:
                if len(elems) >= cap:
                    raise NotSymplectic("matrix closure exceeded the cap")
                elems[k] = nxt
                frontier.append(nxt)
    return list(elems.values())
