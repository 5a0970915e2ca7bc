"""Sparse multivariate polynomials over an exact coefficient field.

Coefficients may be :class:`fractions.Fraction` or
:class:`bringcurve.numfield.FieldElement`; mixing is fine as long as the
coefficient arithmetic itself can coerce (Fraction combines with any field
element).  Exponent vectors are tuples of ints.
"""

from __future__ import annotations

from fractions import Fraction

from .unipoly import is_zero_coeff


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not is_zero_coeff(c):
                    self.terms[tuple(e)] = c

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, one=Fraction(1)) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): one})

    @classmethod
    def variables(cls, nvars: int, one=Fraction(1)) -> list["MPoly"]:
        return [cls.var(nvars, i, one) for i in range(nvars)]

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other if not isinstance(other, int)
                                else Fraction(other))
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if is_zero_coeff(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        r = MPoly(self.nvars)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MPoly(self.nvars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other if not isinstance(other, int)
                                else Fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            out = MPoly(self.nvars)
            if is_zero_coeff(other * 1 if isinstance(other, int) else other):
                return out
            out.terms = {e: c * other for e, c in self.terms.items()}
            out.terms = {e: c for e, c in out.terms.items() if not is_zero_coeff(c)}
            return out
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if e in out:
                    out[e] = out[e] + c1 * c2
                else:
                    out[e] = c1 * c2
        r = MPoly(self.nvars)
        r.terms = {e: c for e, c in out.items() if not is_zero_coeff(c)}
        return r

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                break
            base = base * base
        if result is None:
            return MPoly.const(self.nvars, Fraction(1))
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return (self - MPoly.const(self.nvars, other)).is_zero()
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus / evaluation -----------------------------------------------------

    def deriv(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        r = MPoly(self.nvars)
        r.terms = {e: c for e, c in out.items() if not is_zero_coeff(c)}
        return r

    def eval(self, values, to_num=None):
        """Evaluate at values (anything with ring ops).

        ``to_num`` optionally converts each coefficient first (e.g. a field
        embedding for numeric evaluation).
        """
        acc = None
        for e, c in self.terms.items():
            term = to_num(c) if to_num is not None else c
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            acc = term if acc is None else acc + term
        if acc is None:
            z = values[0] * 0 if self.nvars else Fraction(0)
            return z
        return acc

    def subs(self, polys: list) -> "MPoly":
        """Compose: substitute polys[i] for variable i."""
        nv = polys[0].nvars
        acc = MPoly(nv)
        for e, c in self.terms.items():
            term = MPoly.const(nv, c)
            for i, k in enumerate(e):
                if k:
                    term = term * polys[i] ** k
            acc = acc + term
        return acc

    def map_coeffs(self, fn) -> "MPoly":
        r = MPoly(self.nvars)
        r.terms = {e: fn(c) for e, c in self.terms.items()}
        r.terms = {e: c for e, c in r.terms.items() if not is_zero_coeff(c)}
        return r

    def coeff_of(self, exponents: tuple):
        return self.terms.get(tuple(exponents))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = "XYZUVWPQRS"
        parts = []
        for e, c in sorted(self.terms.items()):
            mon = "*".join(f"{names[i % 10]}{i // 10 or ''}^{k}" if k > 1
                           else f"{names[i % 10]}{i // 10 or ''}"
                           for i, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)
