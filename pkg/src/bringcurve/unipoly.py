"""Dense univariate polynomial helpers over an arbitrary exact field.

Polynomials are plain lists of coefficients, lowest degree first.  The
coefficient type only needs ``+ - * /``, equality with itself, and a way to
recognise zero; ``fractions.Fraction`` and :class:`bringcurve.numfield.FieldElement`
both qualify.  Helpers never mutate their inputs.
"""

from __future__ import annotations

from fractions import Fraction


def is_zero_coeff(c) -> bool:
    z = c * 0
    return c == z


def trim(p: list) -> list:
    n = len(p)
    while n > 0 and is_zero_coeff(p[n - 1]):
        n -= 1
    return p[:n]


def degree(p: list) -> int:
    p = trim(p)
    return len(p) - 1  # -1 for the zero polynomial


def add(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return trim(out)


def neg(p: list) -> list:
    return [-c for c in p]


def sub(p: list, q: list) -> list:
    return add(p, neg(q))


def scale(p: list, c) -> list:
    return trim([ci * c for ci in p])


def mul(p: list, q: list) -> list:
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    some = p[0]
    zero = some * 0
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if is_zero_coeff(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_poly(p: list, q: list) -> tuple[list, list]:
    """Euclidean division; the leading coefficient of q must be invertible."""
    p, q = trim(p), list(trim(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = q[-1]
    inv = _inv(lead)
    rem = list(p)
    zero = lead * 0
    if len(rem) < len(q):
        return [], trim(rem)
    quot = [zero] * (len(rem) - len(q) + 1)
    for k in range(len(rem) - len(q), -1, -1):
        c = rem[k + len(q) - 1] * inv
        if is_zero_coeff(c):
            continue
        quot[k] = c
        for j, b in enumerate(q):
            rem[k + j] = rem[k + j] - c * b
    return trim(quot), trim(rem)


def _inv(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(1) / Fraction(c)
    return c.inverse()


def rem_poly(p: list, q: list) -> list:
    return divmod_poly(p, q)[1]


def monic(p: list) -> list:
    p = trim(p)
    if not p:
        return p
    inv = _inv(p[-1])
    return [c * inv for c in p]


def gcd_monic(p: list, q: list) -> list:
    a, b = trim(p), trim(q)
    while b:
        a, b = b, rem_poly(a, b)
    return monic(a)


def xgcd(p: list, q: list) -> tuple[list, list, list]:
    """Return (g, s, t) with s p + t q = g, g monic."""
    one_src = trim(p) or trim(q)
    if not one_src:
        raise ZeroDivisionError("xgcd of zero polynomials")
    one = _inv(one_src[-1]) * one_src[-1]
    a, b = trim(p), trim(q)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while b:
        qk, r = divmod_poly(a, b)
        a, b = b, r
        s0, s1 = s1, sub(s0, mul(qk, s1))
        t0, t1 = t1, sub(t0, mul(qk, t1))
    lead_inv = _inv(a[-1])
    return scale(a, lead_inv), scale(s0, lead_inv), scale(t0, lead_inv)


def eval_poly(p: list, x):
    acc = None
    for c in reversed(trim(p)):
        acc = c if acc is None else acc * x + c
    if acc is None:
        return x * 0
    return acc


def deriv(p: list) -> list:
    return trim([c * i for i, c in enumerate(p)][1:])


def pow_mod(p: list, e: int, m: list) -> list:
    result = [_inv(m[-1]) * m[-1]]  # one in the coefficient field
    base = rem_poly(p, m)
    while e:
        if e & 1:
            result = rem_poly(mul(result, base), m)
        base = rem_poly(mul(base, base), m)
        e >>= 1
    return result


def squarefree_part(p: list) -> list:
    d = deriv(p)
    if not trim(d):
        return monic(p)
    g = gcd_monic(p, d)
    return monic(divmod_poly(p, g)[0])


def from_int_list(ints) -> list:
    return [Fraction(v) for v in ints]


def shift_abscissa(p: list, a) -> list:
    """Return p(x + a)."""
    out = []
    for c in reversed(trim(p)):
        out = add(mul(out, [a, a * 0 + _one_like(a)]), [c])
    return out


def _one_like(a):
    if isinstance(a, (int, Fraction)):
        return Fraction(1)
    return a.parent.one()
