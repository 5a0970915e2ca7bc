"""Fixed integer matrices used across the period and Jacobian checks."""

from __future__ import annotations

M_PERIOD = [
    [4, 1, -1, 1],
    [1, 4, 1, -1],
    [-1, 1, 4, 1],
    [1, -1, 1, 4],
]

M_PERIOD_S = [
    [4, -1, -1, -1],
    [-1, 4, -1, -1],
    [-1, -1, 4, -1],
    [-1, -1, -1, 4],
]

M_PRIME = [
    [2, -1, 1, -1],
    [-1, 2, -1, 1],
    [1, -1, 2, -1],
    [-1, 1, -1, 2],
]

I_W = [
    [0, 1, 1, -1, -1, 0, 0, 1],
    [-1, 0, 1, 1, 0, 1, 0, -1],
    [-1, -1, 0, 1, 0, -1, 0, 0],
    [1, -1, -1, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1, 1, -1],
    [0, -1, 1, 0, -1, 0, 1, 1],
    [0, 0, 0, -1, -1, -1, 0, 1],
    [-1, 1, 0, 0, 1, -1, -1, 0],
]

C_CANONICALIZER = [
    [0, 1, -2, 1, 1, 1, 0, -1],
    [0, 1, -1, 1, 0, 0, -1, 0],
    [0, 0, -1, 0, 0, 1, 1, 0],
    [1, 1, -2, 2, 0, 1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0],
]

R_WEBER = [
    [0, 0, 0, 1, 0, 0, 1, 2],
    [0, -1, 1, 0, -1, -2, 1, 1],
    [1, 0, 1, 0, 2, 1, 1, 1],
    [0, 1, 0, 0, 1, 2, 0, 0],
    [1, 0, 0, 0, 2, 1, 0, 1],
    [1, 0, 1, -1, 1, 1, 1, -1],
    [-1, 0, 0, 1, -1, -1, 1, 2],
    [1, 0, 1, -1, 1, 2, 1, -1],
]

GONZALEZ_C = [
    [-1, 1, -1, 2],
    [1, 0, 0, 1],
    [0, -1, 0, 1],
    [0, 0, 0, 1],
]

GONZALEZ_D = [
    [0, 1, 0, -1],
    [0, 0, -1, 1],
    [-1, -1, -1, 4],
    [0, 0, 0, 1],
]

GONZALEZ_E = [
    [-1, 1, 0, 0],
    [1, 0, -1, 0],
    [-2, -1, -1, 1],
    [1, 0, 0, 0],
]


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def diag(*entries):
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


def symplectic_j(g: int):
    out = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        out[i][g + i] = 1
        out[g + i][i] = -1
    return out


def scalar_mul(c, a):
    return [[c * x for x in row] for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
