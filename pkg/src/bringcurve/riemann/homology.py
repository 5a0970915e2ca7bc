"""Homology of the covering from monodromy: graph cycles, numeric
intersection numbers, and integer symplectic reduction.

The punctured cover deformation-retracts onto the covering graph of the
wedge of loops around the nontrivial branch points: vertices are the five
sheets, one edge per (sheet, branch point).  Fundamental cycles of that
graph generate H1 of the compact surface; the intersection form (computed by
counting signed same-sheet crossings of explicit representatives) has the
place loops in its kernel, and an integer Frobenius reduction extracts a
symplectic basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from ..errors import InconsistentMonodromy, RankDeficient, SheetCollision
from . import curve as cv


@dataclass
class EdgeData:
    sheet: int
    branch_index: int          # index into PlaneCurve.singular
    target: int                # sheet after the loop
    samples: list              # [(prim, t, x, y)] along the lifted loop


@dataclass
class HomologyData:
    curve: cv.PlaneCurve
    branch_indices: list[int]          # nontrivial branch points, angle order
    permutations: dict[int, tuple]     # branch index -> sheet permutation
    inf_permutation: tuple
    edges: dict[tuple, EdgeData]       # (sheet, branch index) -> data
    cycles: list[dict]                 # fundamental cycles: edge -> coefficient
    intersection: list[list[int]]      # full Gram matrix of the cycles
    sympl_basis: list[dict]            # eight cycles (edge -> coeff)
    basis_transform: list[list[int]]   # rows: symplectic basis in cycle coords


def build_homology(pc: cv.PlaneCurve, progress=None) -> HomologyData:
    perms = {}
    edges = {}
    nontrivial = []
    order = pc.loop_order()
    for idx in order:
        loop = pc.loop_around(idx)
        samples = []
        sigma = _monodromy_with_samples(pc, loop, samples)
        perms[idx] = sigma
        if sigma != (0, 1, 2, 3, 4):
            nontrivial.append(idx)
            for s in range(5):
                edges[(s, idx)] = EdgeData(s, idx, sigma[s],
                                           [(pi, t, x, ys[s]) for pi, t, x, ys in samples])
        if progress:
            progress(f"monodromy at {idx}")
    # the nested loops are disjoint away from the hub, so the composition in
    # rank order is the boundary of the disk = the inverse infinity loop
    prod = (0, 1, 2, 3, 4)
    for idx in order:
        prod = tuple(perms[idx][prod[i]] for i in range(5))
    sigma_big = pc.monodromy_permutation(pc.infinity_loop())
    if prod != sigma_big:
        raise InconsistentMonodromy(
            f"sphere relation fails: product {prod} vs boundary {sigma_big}")
    # monodromy around infinity = inverse of the disk boundary
    sigma_inf = [0] * 5
    for i, v in enumerate(sigma_big):
        sigma_inf[v] = i
    sigma_inf = tuple(sigma_inf)
    ctype = tuple(sorted((len(c) for c in _cycles_of(sigma_inf)), reverse=True))
    if ctype != (4, 1):
        raise InconsistentMonodromy(f"infinity cycle type {ctype}")

    cycles, nontree_edges = _fundamental_cycles(edges, nontrivial)
    inter = _intersection_matrix(pc, edges, cycles)
    _validate_place_loops(perms, nontrivial, cycles, nontree_edges, inter)
    basis_vecs, sympl = _frobenius_reduction(inter)
    sympl_cycles = []
    for row in basis_vecs:
        combo: dict = {}
        for coeff, cyc in zip(row, cycles):
            if coeff:
                for e, m in cyc.items():
                    combo[e] = combo.get(e, 0) + coeff * m
        sympl_cycles.append({e: m for e, m in combo.items() if m})
    return HomologyData(pc, nontrivial, perms, sigma_inf, edges, cycles,
                        inter, sympl_cycles, basis_vecs)


def _monodromy_with_samples(pc: cv.PlaneCurve, loop: cv.Path, samples: list):
    def record(pi, t, x, ys):
        samples.append((pi, t, x, list(ys)))
    start = [mp.mpc(v) for v in pc.hub_fiber]
    end = pc.continue_fiber(loop, start, record=record)
    return cv.match_permutation(start, end)


def _cycles_of(sigma):
    seen, out = [False] * 5, []
    for i in range(5):
        if not seen[i]:
            c, j = [i], sigma[i]
            seen[i] = True
            while j != i:
                c.append(j)
                seen[j] = True
                j = sigma[j]
            out.append(tuple(c))
    return out


def _fundamental_cycles(edges, nontrivial):
    """Spanning tree on (sheets, edges); one cycle per non-tree edge."""
    parent = {0: None}
    tree_edges = {}
    frontier = [0]
    edge_list = sorted(edges)
    while frontier:
        s = frontier.pop(0)
        for (sh, bi) in edge_list:
            if sh == s:
                t = edges[(sh, bi)].target
                if t not in parent:
                    parent[t] = (sh, bi, +1)
                    tree_edges[(sh, bi)] = True
                    frontier.append(t)
            elif edges[(sh, bi)].target == s:
                if sh not in parent:
                    parent[sh] = (sh, bi, -1)
                    tree_edges[(sh, bi)] = True
                    frontier.append(sh)
    if len(parent) != 5:
        raise RankDeficient("monodromy group is not transitive on sheets")

    def path_to_root(s):
        out = {}
        while parent[s] is not None:
            sh, bi, orient = parent[s]
            out[(sh, bi)] = out.get((sh, bi), 0) + orient
            s = sh if orient == +1 else edges[(sh, bi)].target
        return out

    cycles = []
    nontree = []
    for e in edge_list:
        if e in tree_edges:
            continue
        sh, bi = e
        combo = {e: 1}
        for k, v in path_to_root(sh).items():
            combo[k] = combo.get(k, 0) + v
        for k, v in path_to_root(edges[e].target).items():
            combo[k] = combo.get(k, 0) - v
        cycles.append({k: v for k, v in combo.items() if v})
        nontree.append(e)
    return cycles, nontree


# ---------------------------------------------------------------------------
# combinatorial intersection numbers
#
# The nested loops are pairwise disjoint away from the hub once each loop's
# highway is pushed to its own radius, so two cycles can only intersect
# inside a small disk around the hub on each sheet.  There a cycle appears
# as a collection of u-turn connectors joining boundary ports (ordered by
# highway radius, sub-ordered by a per-cycle push-off); the intersection
# number is the signed count of interleaved connector chords.


def _cycle_walk(edges, cycle: dict):
    """Ordered closed walk [(edge, +-1)] realizing the cycle."""
    steps = []
    for e, m in cycle.items():
        for _ in range(abs(m)):
            steps.append((e, 1 if m > 0 else -1))
    walk = []
    cur = None
    remaining = steps[:]
    while remaining:
        progressed = False
        for i, (e, orient) in enumerate(remaining):
            data = edges[e]
            src = data.sheet if orient > 0 else data.target
            dst = data.target if orient > 0 else data.sheet
            if cur is None or src == cur:
                walk.append((e, orient))
                cur = dst
                remaining.pop(i)
                progressed = True
                break
        if not progressed:
            raise RankDeficient("cycle multiset did not assemble into a walk")
    first = walk[0]
    start = edges[first[0]].sheet if first[1] > 0 else edges[first[0]].target
    if cur != start:
        raise RankDeficient("walk is not closed")
    return walk


def _cycle_connectors(pc, edges, cycle: dict, cycle_index: int, mu):
    """Connector chords of the cycle: (sheet, port_from, port_to).

    Ports: the traversal of edge (s, j) leaves through the out-port of its
    highway and arrives through the in-port; copies belonging to different
    cycles are pushed off by cycle_index * mu with the sign fixed by a
    left-hand push-off along the arc (plus at out-ports, minus at in-ports).
    """
    walk = _cycle_walk(edges, cycle)
    k = cycle_index + 1

    def ports(e, orient):
        s, j = e
        rank = pc.loop_rank(j)
        base_in = 4 * rank + 1
        base_out = 4 * rank + 2
        p_out = base_out + k * mu
        p_in = base_in - k * mu
        if orient > 0:
            # departs sheet s via out-port, arrives sheet sigma(s) via in-port
            return (s, p_out), (edges[e].target, p_in)
        return (edges[e].target, p_in), (s, p_out)

    chords = []
    n = len(walk)
    for i in range(n):
        _dep_i, arr_i = ports(*walk[i])
        dep_next, _arr_next = ports(*walk[(i + 1) % n])
        if arr_i[0] != dep_next[0]:
            raise RankDeficient("connector sheets disagree")
        chords.append((arr_i[0], arr_i[1], dep_next[1]))
    return chords


def _chord_sign(a, b, c, d) -> int:
    """Signed crossing of oriented chords a->b and c->d with endpoints on a
    line (ports) and arcs in a fixed half-plane; 0 unless interleaved.

    Model: semicircles in the left half-plane over the port axis; the sign
    is the orientation of (tangent1, tangent2) at the unique crossing."""
    lo1, hi1 = min(a, b), max(a, b)
    lo2, hi2 = min(c, d), max(c, d)
    inter1 = lo1 < c < hi1
    inter2 = lo1 < d < hi1
    if inter1 == inter2:
        return 0
    m1, r1 = (a + b) / 2.0, abs(b - a) / 2.0
    m2, r2 = (c + d) / 2.0, abs(d - c) / 2.0
    # circles centered on the port axis (x = 0): crossing height y0
    y0 = (r1 * r1 - r2 * r2 - m1 * m1 + m2 * m2) / (2.0 * (m2 - m1))
    x0sq = r1 * r1 - (y0 - m1) ** 2
    x0 = -(x0sq ** 0.5)  # left half-plane
    # tangent along semicircle i at (x0, y0), oriented from start to end:
    # going from (0, start) into x < 0 means clockwise/ccw depending on sign
    def tangent(m, start, end):
        # position angle phi with (x, y) = (r cos phi + 0, m + r sin phi);
        # x0 < 0 so cos phi < 0.  Taking the arc through the left half-plane,
        # the motion from (0, start) to (0, end) has d(phi)/dt sign:
        sgn = 1.0 if end > start else -1.0
        # velocity = sgn * d/dphi (r cos, m + r sin) = sgn * (-y + m, x)
        return (sgn * (m - y0), sgn * x0)

    t1 = tangent(m1, a, b)
    t2 = tangent(m2, c, d)
    det = t1[0] * t2[1] - t1[1] * t2[0]
    return 1 if det > 0 else -1


def _intersection_matrix(pc, edges, cycles):
    n = len(cycles)
    mu = 1.0 / (8.0 * (n + 2))
    connectors = [_cycle_connectors(pc, edges, cyc, k, mu)
                  for k, cyc in enumerate(cycles)]
    inter = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            total = 0
            for sa, pa1, pa2 in connectors[a]:
                for sb, pb1, pb2 in connectors[b]:
                    if sa != sb:
                        continue
                    total += _chord_sign(pa1, pa2, pb1, pb2)
            inter[a][b] = total
            inter[b][a] = -total
    return inter


def _validate_place_loops(perms, nontrivial, cycles, nontree_edges, inter):
    """Loops around places (branch-point cycles) must be null-homologous:
    their fundamental-cycle coordinates (the coefficients on non-tree edges)
    annihilate the intersection matrix."""
    for idx in nontrivial:
        sigma = perms[idx]
        for orb in _cycles_of(sigma):
            vec = {}
            for s in orb:
                vec[(s, idx)] = vec.get((s, idx), 0) + 1
            coords = [vec.get(e, 0) for e in nontree_edges]
            for row in range(len(cycles)):
                val = sum(inter[row][k] * coords[k] for k in range(len(cycles)))
                if val != 0:
                    raise InconsistentMonodromy(
                        f"place loop at branch {idx} is not in the kernel")


# ---------------------------------------------------------------------------
# integer symplectic (Frobenius) reduction


def _frobenius_reduction(inter):
    """Unimodular change of basis bringing the skew form to J (+ kernel).

    Returns (rows, g): ``rows`` is a list of 2g integer vectors a1..ag,
    b1..bg in the original coordinates with <a_i, b_j> = delta_ij and all
    other pairings zero.

    Standard integer skew reduction: move a minimal entry to the pivot block,
    reduce the two pivot rows mod the pivot (each reduction is independent
    thanks to skew-symmetry), and iterate; |pivot| strictly decreases until
    it reaches 1 (the form is unimodular on its image for a surface)."""
    n = len(inter)
    A = [row[:] for row in inter]
    basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def addrow(dst, src, c):
        # e_dst += c e_src
        if not c:
            return
        for k in range(n):
            A[dst][k] += c * A[src][k]
        for k in range(n):
            A[k][dst] += c * A[k][src]
        for k in range(n):
            basis[dst][k] += c * basis[src][k]

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for k in range(n):
            A[k][i], A[k][j] = A[k][j], A[k][i]
        basis[i], basis[j] = basis[j], basis[i]

    pairs = 0
    pos = 0
    while True:
        best = None
        for i in range(pos, n):
            for j in range(pos, n):
                v = A[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        i0, j0, _v = best
        swap(pos, i0)
        if j0 == pos:
            j0 = i0
        swap(pos + 1, j0)
        p = A[pos][pos + 1]
        # reduce the pivot rows modulo p
        changed = False
        for j in range(pos + 2, n):
            c = -(A[pos][j] // p)
            if A[pos][j] % p:
                changed = True
            addrow(j, pos + 1, c)
            c2 = A[pos + 1][j] // p
            if A[pos + 1][j] % p:
                changed = True
            addrow(j, pos, c2)
        cleared = all(A[pos][j] == 0 and A[pos + 1][j] == 0
                      for j in range(pos + 2, n))
        if changed or not cleared:
            continue
        if abs(p) != 1:
            carrier = None
            for i in range(pos + 2, n):
                for j in range(pos + 2, n):
                    if A[i][j] % p:
                        carrier = i
                        break
                if carrier is not None:
                    break
            if carrier is None:
                raise RankDeficient(f"pivot {p} does not divide the block")
            addrow(pos, carrier, 1)
            continue
        if p == -1:
            swap(pos, pos + 1)
        pairs += 1
        pos += 2
    g = pairs
    rows = [basis[2 * k] for k in range(g)] + [basis[2 * k + 1] for k in range(g)]
    for a in range(2 * g):
        for b in range(2 * g):
            val = _pair(inter, rows[a], rows[b])
            expect = 1 if b == a + g else (-1 if a == b + g else 0)
            if val != expect:
                raise RankDeficient("symplectic verification failed")
    return rows, g


def _pair(inter, u, v):
    n = len(inter)
    out = 0
    for i in range(n):
        if not u[i]:
            continue
        row = inter[i]
        for j in range(n):
            if v[j]:
                out += u[i] * row[j] * v[j]
    return out
