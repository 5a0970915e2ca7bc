"""The S5 automorphism group in its several realizations.

Elements are keyed by the permutation they induce on the P^4 coordinates
(the isomorphism psi fixed by the transport maps of :mod:`bringcurve.models`).
The even half acts on the plane model through 3x3 matrices over QQ[zeta]
(with 1/sqrt(5) cleared projectively); the odd half composes a word with the
order-4 rational map U.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import models as md
from . import numfield as nf
from .errors import (
    ClosureOverflow,
    IndeterminatePoint,
    NonIntegerGenus,
)
from .multipoly import MPoly
from .numfield import QZ, QZI, SQRT5, ZETA

# ---------------------------------------------------------------------------
# permutation helpers (tuples p with p[i] = image of i, 0-indexed)

IDENTITY_PERM = (0, 1, 2, 3, 4)


def perm_mul(p: tuple, q: tuple) -> tuple:
    """Composition p o q (apply q first)."""
    return tuple(p[q[i]] for i in range(5))


def perm_inv(p: tuple) -> tuple:
    out = [0] * 5
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_from_cycles(*cycles) -> tuple:
    """1-indexed cycles, e.g. perm_from_cycles((1,3),(2,4))."""
    out = list(range(5))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a - 1] = b - 1
    return tuple(out)


def perm_cycles(p: tuple) -> list[tuple]:
    seen, out = [False] * 5, []
    for i in range(5):
        if not seen[i]:
            c, j = [i], p[i]
            seen[i] = True
            while j != i:
                c.append(j)
                seen[j] = True
                j = p[j]
            out.append(tuple(c))
    return out


def cycle_type(p: tuple) -> tuple:
    return tuple(sorted((len(c) for c in perm_cycles(p)), reverse=True))


def perm_sign(p: tuple) -> int:
    return (-1) ** sum(len(c) - 1 for c in perm_cycles(p))


def perm_order(p: tuple) -> int:
    import math
    out = 1
    for c in perm_cycles(p):
        out = out * len(c) // math.gcd(out, len(c))
    return out


def cycle_str(p: tuple) -> str:
    cs = [c for c in perm_cycles(p) if len(c) > 1]
    if not cs:
        return "e"
    return "".join("(" + "".join(str(i + 1) for i in c) + ")" for c in cs)


# ---------------------------------------------------------------------------
# generators

_Z = ZETA
SQRT5_R = [
    [QZ(1), QZ(2), QZ(2)],
    [QZ(1), _Z ** 2 + _Z ** -2, _Z + _Z ** -1],
    [QZ(1), _Z + _Z ** -1, _Z ** 2 + _Z ** -2],
]
S_MAT = [
    [QZ(1), QZ(0), QZ(0)],
    [QZ(0), _Z, QZ(0)],
    [QZ(0), QZ(0), _Z ** -1],
]

PSI_R = perm_from_cycles((1, 3), (2, 4))
PSI_S = perm_from_cycles((1, 3, 4, 2, 5))
PSI_U = perm_from_cycles((1, 3, 2, 4))

_XM, _YM, _ZM = MPoly.variables(3)
U_MAP = [
    -(_YM ** 5 + _XM ** 3 * _YM * _ZM - 3 * _XM * _YM ** 2 * _ZM ** 2 + _ZM ** 5),
    -(_XM * _YM ** 2 - _ZM ** 3) * (_YM * _ZM - _XM ** 2),
    (_YM * _ZM - _XM ** 2) * (_YM ** 3 - _XM * _ZM ** 2),
]


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def _mat_is_scalar(m) -> bool:
    n = len(m)
    diag = m[0][0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if not (m[i][j] == diag):
                    return False
            elif not (m[i][j] == m[i][j] * 0):
                return False
    return not (diag == diag * 0)


@dataclass(frozen=True)
class Automorphism:
    """One group element; realizations are derived from ``perm`` plus the
    stored plane-model data (matrix for the even part, U-composition flag)."""

    perm: tuple
    pgl3: tuple | None = None       # matrix over QQ[zeta], odd elements: even part
    odd: bool = False               # acts as pgl3 o U on the plane model

    @property
    def order(self) -> int:
        return perm_order(self.perm)

    def __repr__(self):
        return f"Aut[{cycle_str(self.perm)}]"


def generators() -> dict[str, Automorphism]:
    """R, S, U with the relations R^2 = S^5 = (RS)^3 = U^4 = id verified
    exactly (projectively, sqrt(5) factors cleared)."""
    R = Automorphism(PSI_R, _freeze(SQRT5_R))
    S = Automorphism(PSI_S, _freeze(S_MAT))
    U = Automorphism(PSI_U, _freeze(_identity3()), odd=True)
    r2 = _mat_mul(SQRT5_R, SQRT5_R)
    s5 = _mat_mul(S_MAT, _mat_mul(S_MAT, _mat_mul(S_MAT, _mat_mul(S_MAT, S_MAT))))
    rs = _mat_mul(SQRT5_R, S_MAT)
    rs3 = _mat_mul(rs, _mat_mul(rs, rs))
    if not (_mat_is_scalar(r2) and _mat_is_scalar(s5) and _mat_is_scalar(rs3)):
        raise ClosureOverflow("generator relations failed")
    return {"R": R, "S": S, "U": U}


def _identity3():
    return [[QZ(1 if i == j else 0) for j in range(3)] for i in range(3)]


def _freeze(m):
    return tuple(tuple(row) for row in m)


def _thaw(m):
    return [list(row) for row in m]


_GROUP: dict[tuple, Automorphism] | None = None


def enumerate_group() -> dict[tuple, Automorphism]:
    """Closure of {R, S, U}: 120 elements keyed by permutation.

    Even elements carry an exact PGL3 matrix; odd elements the even part of
    their factorization g = h o U.
    """
    global _GROUP
    if _GROUP is not None:
        return _GROUP
    gens = generators()
    even = {IDENTITY_PERM: _freeze(_identity3())}
    frontier = [IDENTITY_PERM]
    gen_pairs = [(gens["R"].perm, SQRT5_R), (gens["S"].perm, S_MAT)]
    while frontier:
        cur = frontier.pop()
        curmat = _thaw(even[cur])
        for gp, gm in gen_pairs:
            new = perm_mul(gp, cur)
            if new not in even:
                if len(even) > 60:
                    raise ClosureOverflow("A5 closure exceeded size 60")
                even[new] = _freeze(_mat_mul(gm, curmat))
                frontier.append(new)
    if len(even) != 60:
        raise ClosureOverflow(f"A5 closure has {len(even)} elements")
    out = {p: Automorphism(p, m) for p, m in even.items()}
    for p, m in even.items():
        q = perm_mul(p, PSI_U)
        out[q] = Automorphism(q, m, odd=True)
    if len(out) != 120:
        raise ClosureOverflow(f"closure has {len(out)} elements")
    _GROUP = out
    return out


def group_element(perm: tuple) -> Automorphism:
    return enumerate_group()[perm]


def psi(g: Automorphism) -> tuple:
    """The permutation induced on the P^4 coordinates."""
    return g.perm


# ---------------------------------------------------------------------------
# action on points


def act(g: Automorphism, p: md.ProjectivePoint) -> md.ProjectivePoint:
    """Image of p under g, staying on the same model."""
    if p.model == md.P4:
        out = [None] * 5
        for j in range(5):
            out[g.perm[j]] = p.coords[j]
        return md.ProjectivePoint(md.P4, out)
    if p.model in (md.CANONICAL_L, md.CANONICAL_V):
        mat = analytic_representation(g, basis="L" if p.model == md.CANONICAL_L else "v")
        zeta = md._zeta_for_coords(p.coords)
        vec = list(p.coords)
        if zeta is None and p.is_exact:
            vec = [md._numeric_coord(c, mp.mp.prec) for c in vec]
        return md.ProjectivePoint(p.model, md._apply_matrix(_thaw(mat), vec, zeta))
    if p.model == md.HC:
        if p.is_exact and p.branch_tag is not None:
            # route tagged special points through P^4, back via the catalog
            q = md.transport(p, dst=md.P4)
            q = act(g, q)
            return md.transport(q, src=md.P4, dst=md.HC)
        q = p
        if g.odd:
            q = _apply_u(q)
        mat = _thaw(g.pgl3)
        zeta = md._zeta_for_coords(q.coords)
        vec = list(q.coords)
        if zeta is None and q.is_exact:
            vec = [md._numeric_coord(c, mp.mp.prec) for c in vec]
        return md.ProjectivePoint(md.HC, md._apply_matrix(mat, vec, zeta))
    raise IndeterminatePoint(f"no action realization on model {p.model}")


def _apply_u(p: md.ProjectivePoint) -> md.ProjectivePoint:
    if p.is_exact:
        vals = [c.eval(list(p.coords)) for c in U_MAP]
        if all(md._is_zero_like(v) for v in vals):
            raise IndeterminatePoint(f"{p} lies on the base locus of U")
    else:
        vals = [c.eval([mp.mpc(v) for v in p.coords],
                       to_num=lambda cc: md._numeric_coord(cc, mp.mp.prec))
                for c in U_MAP]
        if max(abs(v) for v in vals) < mp.mpf(2) ** (-mp.mp.prec // 2):
            raise IndeterminatePoint(f"{p} is numerically on the base locus of U")
    return md.ProjectivePoint(md.HC, vals)


# ---------------------------------------------------------------------------
# analytic (differential) representation


def standard_rep_matrix(perm: tuple):
    """The 4x4 standard representation on (x1..x4) with x5 = -(x1+..+x4);
    genuine pullback matrices, trace = (fixed points of perm) - 1."""
    inv = perm_inv(perm)
    rows = []
    for i in range(4):
        j = inv[i]
        if j < 4:
            rows.append([QZ(1 if k == j else 0) for k in range(4)])
        else:
            rows.append([QZ(-1)] * 4)
    return rows


_ANALYTIC_CACHE: dict[tuple, tuple] = {}


def analytic_representation(g: Automorphism, basis: str = "v") -> tuple:
    """Matrix of g on the canonical coordinates, basis "v" or "L".

    Conjugate of the standard permutation representation by the fixed
    birational identifications; exact over QQ[zeta].
    """
    key = (g.perm, basis)
    if key not in _ANALYTIC_CACHE:
        N = standard_rep_matrix(g.perm)
        # x = A L  =>  action on L is A^-1 N A;  v = T L conjugates further
        AL = _mat_mul(md.A_INV, _mat_mul(N, md.A_MATRIX))
        if basis == "L":
            out = AL
        else:
            TQ = [[QZ(c) for c in row] for row in md.T_VL]
            TQI = [[QZ(c) for c in row] for row in md.T_VL_INV]
            out = _mat_mul(TQ, _mat_mul(AL, TQI))
        _ANALYTIC_CACHE[key] = _freeze(out)
    return _ANALYTIC_CACHE[key]


def analytic_numeric(g: Automorphism, prec: int | None = None):
    prec = prec or mp.mp.prec
    mat = analytic_representation(g, basis="v")
    emb = nf.ZETA_EMBEDDING
    return mp.matrix([[mp.mpc(emb.value(c, prec)) for c in row] for row in mat])


# ---------------------------------------------------------------------------
# action on the two rulings of the quadric


def quadric_action(g: Automorphism):
    """Action on P^1 x P^1 as (M_first, M_second, swap).

    new_first = M_first . (old_second if swap else old_first) and
    new_second = M_second . (old_first if swap else old_second); the swap
    flag is the parity of g.  Matrices are exact 2x2 over QQ[zeta, i] in the
    coordinate order ([u:v], [z:w])."""
    K = QZI
    mat = [[K(c) for c in row] for row in analytic_representation(g, basis="v")]

    def phi(p1, p2):
        (u, v), (z, w) = p1, p2
        return [u * z, v * w, v * z, -(u * w)]

    def apply(vec):
        return [sum(mat[i][j] * vec[j] for j in range(4)) for i in range(4)]

    def ruling_split(vec):
        v1, v2, v3, v4 = vec
        if not (md._is_zero_like(v1) and md._is_zero_like(v3)):
            first = (v1, v3)
        else:
            first = (-v4, v2)
        if not (md._is_zero_like(v2) and md._is_zero_like(v3)):
            second = (v3, v2)
        else:
            second = (v1, -v4)
        return first, second

    one, zero = K(1), K(0)
    base2 = (one, zero + 1)  # generic second factor (1 : 1)
    probes = [(one, zero), (zero, one), (one, one)]
    images1 = []
    swap = perm_sign(g.perm) < 0
    for p1 in probes:
        img = ruling_split(apply(phi(p1, base2)))
        images1.append(img[1] if swap else img[0])
    M1 = _matrix_from_point_images(probes, images1, K)
    images2 = []
    base1 = (one, one + one)  # generic first factor (1 : 2)
    for p2 in probes:
        img = ruling_split(apply(phi(base1, p2)))
        images2.append(img[0] if swap else img[1])
    M2 = _matrix_from_point_images(probes, images2, K)
    # M2 sends a varying second factor to the new first factor (when
    # swapped), M1 the converse; report in (first, second) output order.
    return _freeze(M2), _freeze(M1), swap


def _matrix_from_point_images(probes, images, K):
    """2x2 matrix (up to scale) sending (1:0),(0:1),(1:1) to the images."""
    a, b, c = images
    # M = [lam*a | mu*b] with lam*a + mu*b ~ c: solve 2x2 system
    det = a[0] * b[1] - a[1] * b[0]
    if md._is_zero_like(det):
        raise IndeterminatePoint("degenerate ruling images")
    lam = (c[0] * b[1] - c[1] * b[0]) / det
    mu = (a[0] * c[1] - a[1] * c[0]) / det
    return [[a[0] * lam, b[0] * mu], [a[1] * lam, b[1] * mu]]


# ---------------------------------------------------------------------------
# fixed points


def fixed_points(g: Automorphism) -> list[md.ProjectivePoint]:
    """Exact fixed points of g on the P^4 model.

    Eigenvector analysis per cycle type: coordinates along a cycle of length
    m form a geometric progression with ratio an m-th root of unity; the
    curve equations then cut out the solutions listed below (the negative
    cases reduce to a visibly nonzero power sum).
    """
    if g.perm == IDENTITY_PERM:
        raise ValueError("fixed_points expects a nontrivial element")
    cycles = perm_cycles(g.perm)
    ctype = cycle_type(g.perm)
    if ctype == (2, 1, 1, 1):
        two = next(c for c in cycles if len(c) == 2)
        ones = [c[0] for c in cycles if len(c) == 1]
        pts = []
        K = nf.QAB
        roots = [K(nf.ALPHA), nf.BETA, nf.GAMMA]
        for assign in itertools.permutations(roots):
            coords = [K(1)] * 5
            for pos, val in zip(ones, assign):
                coords[pos] = val
            pts.append(md.ProjectivePoint(md.P4, coords))
        return pts
    if ctype == (2, 2, 1):
        (c1, c2) = [c for c in cycles if len(c) == 2]
        fixpos = next(c[0] for c in cycles if len(c) == 1)
        K = QZI
        i = K.gen()
        pts = []
        for t2 in (i, -i):
            coords = [K(0)] * 5
            coords[c1[0]], coords[c1[1]] = K(1), K(-1)
            coords[c2[0]], coords[c2[1]] = t2, -t2
            pts.append(md.ProjectivePoint(md.P4, coords))
        return pts
    if ctype in ((3, 1, 1), (3, 2)):
        return []
    if ctype == (4, 1):
        four = next(c for c in cycles if len(c) == 4)
        K = QZI
        i = K.gen()
        pts = []
        for lam in (i, -i):
            coords = [K(0)] * 5
            val = K(1)
            for pos in four:
                coords[pos] = val
                val = val * lam
            pts.append(md.ProjectivePoint(md.P4, coords))
        return pts
    if ctype == (5,):
        five = cycles[0]
        pts = []
        for k in range(1, 5):
            lam = ZETA ** k
            coords = [QZ(0)] * 5
            val = QZ(1)
            for pos in five:
                coords[pos] = val
                val = val * lam
            pts.append(md.ProjectivePoint(md.P4, coords))
        return pts
    raise ValueError(f"unexpected cycle type {ctype}")


FIXED_POINT_TABLE = {
    (2, 1, 1, 1): 6,
    (3, 1, 1): 0,
    (2, 2, 1): 2,
    (4, 1): 2,
    (3, 2): 0,
    (5,): 4,
}

QUOTIENT_GENUS_TABLE = {
    (2, 1, 1, 1): 1,
    (3, 1, 1): 2,
    (2, 2, 1): 2,
    (4, 1): 1,
    (3, 2): 1,   # the source table prints 0 here; see rh_genus and the ledger
    (5,): 0,
}


def fixed_counts_for(perm: tuple) -> dict[int, int]:
    """|Fix(sigma^k)| for k = 1..order-1, from the exact fixed-point sets."""
    n = perm_order(perm)
    out = {}
    p = perm
    for k in range(1, n):
        out[k] = len(fixed_points(group_element(p))) if p != IDENTITY_PERM else 0
        p = perm_mul(p, perm)
    return out


def rh_genus(ctype: tuple, fixed_counts: dict[int, int]) -> int:
    """Genus of the quotient by the cyclic group of an element with the
    given cycle type, from Riemann-Hurwitz with stabilizer-order weights.

    ``fixed_counts[k]`` is |Fix(sigma^k)|; consistency (Fix(sigma) inside
    Fix(sigma^k)) is assumed and checked indirectly by integrality.
    """
    import math
    n = 1
    for c in ctype:
        n = n * c // math.gcd(n, c)
    # N_d = number of points with stabilizer exactly <sigma^d>, d | n, d < n
    divisors = sorted(d for d in range(1, n) if n % d == 0)
    fix_of_subgroup = {}
    for d in divisors:
        fix_of_subgroup[d] = fixed_counts.get(d, 0)
    exact = {}
    B = 0
    for d in divisors:
        nd = fix_of_subgroup[d] - sum(exact[dp] for dp in divisors if dp < d and d % dp == 0)
        exact[d] = nd
        if nd < 0:
            raise NonIntegerGenus("inconsistent fixed-point counts")
        B += nd * (n // d - 1)
    num = 6 - B  # 2g_B - 2 = n (2 g_H - 2) + B with g_B = 4
    if num % (2 * n):
        raise NonIntegerGenus(f"2 g - 2 = {num}/{n} is not an even integer multiple")
    return num // (2 * n) + 1
