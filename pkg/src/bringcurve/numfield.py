"""Exact arithmetic in number-field towers over the rationals.

A :class:`NumberField` is defined by a monic irreducible polynomial whose
coefficients live in a base field (``base=None`` means the rationals, with
plain :class:`fractions.Fraction` coefficients).  Towers stay towers:
arithmetic never flattens, and an absolute primitive-element representation
is built lazily only when factorisation demands it.

Complex embeddings are numeric (mpmath) with certified residuals: a stored
generator approximation ``t`` for the defining polynomial ``m`` always
satisfies ``|m(t)| < 2**(-prec + guard)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath as mp
import sympy as sp

from . import unipoly as up
from .errors import (
    DivisionByZero,
    IncompatibleFields,
    PrecisionUnachievable,
    ReducibleDefiningPolynomial,
)

_EMBED_GUARD = 24


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, sp.Rational):
        return Fraction(int(v.p), int(v.q))
    raise TypeError(f"cannot interpret {v!r} as a rational number")


class NumberField:
    """One storey of a number-field tower."""

    def __init__(self, min_poly, base: "NumberField | None" = None, name: str = "t",
                 check_irreducible: bool = True):
        self.base = base
        self.name = name
        coeffs = [self._coerce_base(c) for c in min_poly]
        coeffs = up.trim(coeffs)
        if len(coeffs) < 2:
            raise ReducibleDefiningPolynomial("defining polynomial must be non-constant")
        self.defining_polynomial = tuple(up.monic(coeffs))
        self.degree = len(self.defining_polynomial) - 1
        if self.degree < 2:
            raise ReducibleDefiningPolynomial(
                "degree-1 polynomial defines a trivial extension")
        if check_irreducible and not _is_irreducible(list(self.defining_polynomial), base):
            raise ReducibleDefiningPolynomial(
                f"{name}: defining polynomial factors over the base field")
        self._abs = None
        self._embeddings = None

    # -- basic structure ---------------------------------------------------

    def _coerce_base(self, v):
        if self.base is None:
            if isinstance(v, FieldElement):
                if v.parent.base is not None:
                    raise IncompatibleFields("coefficient is not rational")
                raise IncompatibleFields("rational base expects Fraction coefficients")
            return _to_fraction(v)
        return self.base(v)

    @property
    def absolute_degree(self) -> int:
        d = self.degree
        k = self.base
        while k is not None:
            d *= k.degree
            k = k.base
        return d

    def chain(self) -> list["NumberField"]:
        """Tower levels, bottom first."""
        out, k = [], self
        while k is not None:
            out.append(k)
            k = k.base
        return list(reversed(out))

    def __repr__(self):
        return f"NumberField({self.name}, deg {self.degree} over {self.base or 'QQ'})"

    # -- element construction ---------------------------------------------

    def _base_zero(self):
        return Fraction(0) if self.base is None else self.base.zero()

    def _base_one(self):
        return Fraction(1) if self.base is None else self.base.one()

    def elem(self, coeffs) -> "FieldElement":
        cs = [self._coerce_base(c) if not self._is_base_elem(c) else c for c in coeffs]
        cs = up.trim(cs)
        if len(cs) >= self.degree + 1:
            cs = up.rem_poly(cs, list(self.defining_polynomial))
        return FieldElement(self, tuple(cs))

    def _is_base_elem(self, v):
        if self.base is None:
            return isinstance(v, Fraction)
        return isinstance(v, FieldElement) and v.parent is self.base

    def zero(self) -> "FieldElement":
        return FieldElement(self, ())

    def one(self) -> "FieldElement":
        return FieldElement(self, (self._base_one(),))

    def gen(self) -> "FieldElement":
        return FieldElement(self, (self._base_zero(), self._base_one()))

    def __call__(self, v) -> "FieldElement":
        if isinstance(v, FieldElement):
            if v.parent is self:
                return v
            if _is_ancestor(v.parent, self):
                return self.elem([_lift_once_chain(v, self)])
            raise IncompatibleFields(f"no coercion from {v.parent} into {self}")
        if isinstance(v, (int, Fraction, sp.Rational)):
            q = _to_fraction(v)
            if self.base is None:
                return self.elem([q])
            return self.elem([self.base(q)])
        raise IncompatibleFields(f"cannot coerce {v!r} into {self}")

    def random_element(self, rng, height: int = 10) -> "FieldElement":
        def rand_base():
            if self.base is None:
                return Fraction(rng.randint(-height, height),
                                rng.randint(1, height))
            return self.base.random_element(rng, height)
        return self.elem([rand_base() for _ in range(self.degree)])

    # -- embeddings ---------------------------------------------------------

    def embeddings(self) -> list["FieldEmbedding"]:
        """All complex embeddings, in a deterministic order."""
        if self._embeddings is None:
            if self.base is None:
                base_embs = [FieldEmbedding(None, ())]
            else:
                base_embs = self.base.embeddings()
            out = []
            for be in base_embs:
                roots = _certified_roots(self.defining_polynomial, be, 120)
                for r, rp in roots:
                    out.append(FieldEmbedding(self, be.gen_values + ((r, rp),)))
            for i, e in enumerate(out):
                e.index = i
            self._embeddings = out
        return self._embeddings

    def embedding_near(self, *targets) -> "FieldEmbedding":
        """The embedding whose chain of generator values is closest to targets.

        Targets are complex approximations for the generators of the chain,
        bottom field first.
        """
        best, best_d = None, None
        for e in self.embeddings():
            vals = [v for v, _ in e.gen_values]
            d = sum(abs(complex(v) - complex(t)) for v, t in zip(vals, targets))
            if best_d is None or d < best_d:
                best, best_d = e, d
        return best

    # -- absolute representation (lazy) --------------------------------------

    def absolute(self) -> "_AbsoluteData":
        if self._abs is None:
            self._abs = _AbsoluteData(self)
        return self._abs


class FieldElement:
    """An exact element of a :class:`NumberField`; immutable."""

    __slots__ = ("parent", "coeffs", "_hash")

    def __init__(self, parent: NumberField, coeffs: tuple):
        self.parent = parent
        self.coeffs = coeffs
        self._hash = None

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        if len(self.coeffs) > 1:
            return False
        if not self.coeffs:
            return True
        c = self.coeffs[0]
        return isinstance(c, Fraction) or c.is_rational()

    def rational_value(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        c = self.coeffs[0]
        if isinstance(c, Fraction):
            return c
        return c.rational_value()

    # -- arithmetic -----------------------------------------------------------

    def _coerce_pair(self, other):
        if isinstance(other, (int, Fraction, sp.Rational)):
            return self, self.parent(other)
        if not isinstance(other, FieldElement):
            return NotImplemented, NotImplemented
        if other.parent is self.parent:
            return self, other
        if _is_ancestor(other.parent, self.parent):
            return self, self.parent(other)
        if _is_ancestor(self.parent, other.parent):
            return other.parent(self), other
        raise IncompatibleFields(
            f"elements of {self.parent} and {other.parent} cannot be combined")

    def __add__(self, other):
        a, b = self._coerce_pair(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement(a.parent, tuple(up.add(list(a.coeffs), list(b.coeffs))))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.parent, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce_pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce_pair(other)
        if a is NotImplemented:
            return NotImplemented
        prod = up.mul(list(a.coeffs), list(b.coeffs))
        prod = up.rem_poly(prod, list(a.parent.defining_polynomial))
        return FieldElement(a.parent, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        g, s, _ = up.xgcd(list(self.coeffs), list(self.parent.defining_polynomial))
        if up.degree(g) != 0:
            raise ReducibleDefiningPolynomial(
                "element is a zero divisor; defining polynomial is reducible")
        inv = up.scale(s, up._inv(g[0]))
        inv = up.rem_poly(inv, list(self.parent.defining_polynomial))
        return FieldElement(self.parent, tuple(inv))

    def __truediv__(self, other):
        a, b = self._coerce_pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.parent(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.parent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, sp.Rational)):
            other = self.parent(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        try:
            a, b = self._coerce_pair(other)
        except IncompatibleFields:
            return False
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.parent), self.coeffs))
        return self._hash

    def __repr__(self):
        if not self.coeffs:
            return "0"
        t = self.parent.name
        parts = []
        for i, c in enumerate(self.coeffs):
            if isinstance(c, Fraction) and c == 0:
                continue
            if isinstance(c, FieldElement) and c.is_zero():
                continue
            cs = str(c) if isinstance(c, Fraction) else f"({c!r})"
            parts.append(cs if i == 0 else (f"{cs}*{t}" if i == 1 else f"{cs}*{t}^{i}"))
        return " + ".join(parts)

    # -- numerics ----------------------------------------------------------------

    def numeric(self, embedding: "FieldEmbedding", prec: int = 120):
        return embedding.value(self, prec)


# ---------------------------------------------------------------------------
# coercion helpers


def _is_ancestor(anc: NumberField | None, k: NumberField | None) -> bool:
    while k is not None:
        if k is anc:
            return True
        k = k.base
    return anc is None


def _lift_once_chain(v: FieldElement, target: NumberField):
    """Lift v (whose parent is a strict ancestor of target) to target.base."""
    if v.parent is target.base:
        return v
    return target.base(v)


# ---------------------------------------------------------------------------
# embeddings


class FieldEmbedding:
    """A choice of complex root for each storey of the tower.

    ``gen_values`` is a tuple of ``(value, prec)`` pairs, bottom field first.
    Values are refined in place when more precision is requested; refinement
    always re-certifies ``|m(t)| < 2**(-prec + guard)``.
    """

    def __init__(self, field: NumberField | None, gen_values: tuple):
        self.field = field
        self.gen_values = gen_values
        self.index = 0

    def _refined_chain(self, prec: int) -> list:
        if self.field is None:
            return []
        chain = self.field.chain()
        vals = list(self.gen_values)
        out = []
        for lvl, (k, (v, vp)) in enumerate(zip(chain, vals)):
            if vp < prec:
                coeff_vals = [_numeric_in_chain(c, out, prec + _EMBED_GUARD)
                              for c in k.defining_polynomial]
                v = _newton_refine(coeff_vals, v, prec)
                vals[lvl] = (v, prec)
            out.append(vals[lvl][0])
        self.gen_values = tuple(vals)
        return out

    def value(self, elt: FieldElement, prec: int = 120):
        if elt.parent is None:
            raise IncompatibleFields("element has no parent field")
        with mp.workprec(prec + _EMBED_GUARD):
            chain_vals = self._refined_chain(prec + _EMBED_GUARD)
            depth = len(elt.parent.chain())
            return _numeric_in_chain(elt, chain_vals[:depth], prec + _EMBED_GUARD)

    def gen_value(self, prec: int = 120):
        with mp.workprec(prec + _EMBED_GUARD):
            return self._refined_chain(prec + _EMBED_GUARD)[-1]


def _numeric_in_chain(c, chain_vals: list, prec: int):
    """Evaluate coefficient c (Fraction or FieldElement) along embedded chain."""
    with mp.workprec(prec):
        if isinstance(c, Fraction):
            return mp.mpf(c.numerator) / c.denominator
        depth = len(c.parent.chain())
        theta = chain_vals[depth - 1]
        acc = mp.mpc(0)
        for coeff in reversed(c.coeffs):
            acc = acc * theta + _numeric_in_chain(coeff, chain_vals, prec)
        return acc


def _newton_refine(coeff_vals: list, x0, prec: int):
    dcoeffs = [c * i for i, c in enumerate(coeff_vals)][1:]
    with mp.workprec(prec + _EMBED_GUARD):
        x = mp.mpc(x0)
        target = mp.mpf(2) ** (-(prec + _EMBED_GUARD // 2))
        for _ in range(prec.bit_length() + 40):
            f = mp.polyval(list(reversed(coeff_vals)), x)
            if abs(f) < target:
                return x
            fp = mp.polyval(list(reversed(dcoeffs)), x)
            if fp == 0:
                break
            x = x - f / fp
        f = mp.polyval(list(reversed(coeff_vals)), x)
        if abs(f) < mp.mpf(2) ** (-prec + _EMBED_GUARD):
            return x
    raise PrecisionUnachievable(
        f"root refinement stalled (residual {mp.nstr(abs(f), 5)})")


def _certified_roots(poly, base_emb: FieldEmbedding, prec: int) -> list:
    with mp.workprec(prec + _EMBED_GUARD):
        if base_emb.field is None:
            chain_vals = []
        else:
            chain_vals = base_emb._refined_chain(prec + _EMBED_GUARD)
        cvals = [_numeric_in_chain(c, chain_vals, prec + _EMBED_GUARD) for c in poly]
        roots = mp.polyroots(list(reversed(cvals)), extraprec=prec, maxsteps=200)
        roots = sorted(roots, key=lambda r: (mp.nstr(mp.re(r), 25), mp.nstr(mp.im(r), 25)))
        # certify separation: approximations must isolate distinct roots
        for a, b in itertools.combinations(roots, 2):
            if abs(a - b) < mp.mpf(2) ** (-prec // 2):
                raise PrecisionUnachievable("embedding roots too close to isolate")
        return [(mp.mpc(r), prec) for r in roots]


def embed(a: FieldElement, embedding_index: int, precision: int = 120):
    """Complex approximation of a under the indexed embedding.

    Absolute error is bounded by ``2**(-precision)`` for inputs of moderate
    height; the generator approximations carry certified residuals.
    """
    embs = a.parent.embeddings()
    if embedding_index >= len(embs):
        raise IndexError("embedding index out of range")
    return embs[embedding_index].value(a, precision)


# ---------------------------------------------------------------------------
# spec-level operations


def field_create(min_poly, base: NumberField | None = None, name: str = "t") -> NumberField:
    return NumberField(min_poly, base=base, name=name)


def extend_tower(field: NumberField, new_poly, name: str = "u") -> NumberField:
    return NumberField(new_poly, base=field, name=name)


def arithmetic(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** b  # b is an int here
    raise ValueError(f"unknown op {op!r}")


def is_zero(a: FieldElement) -> bool:
    return a.is_zero()


# ---------------------------------------------------------------------------
# factorisation (Trager via the absolute representation) and roots


class _AbsoluteData:
    """Primitive-element data for a tower: Q[x]/(A) isomorphic to the field."""

    def __init__(self, K: NumberField):
        self.K = K
        n = K.absolute_degree
        chain = K.chain()
        if len(chain) == 1:
            self.theta = K.gen()
            self.abs_poly = [c if isinstance(c, Fraction) else c
                             for c in K.defining_polynomial]
            self.abs_field = K
            self._identity = True
            return
        self._identity = False
        base_theta = chain[-1].base.absolute().theta
        for c in _shift_candidates():
            theta = K.gen() + K(base_theta) * c
            powers = [K.one()]
            for _ in range(n):
                powers.append(powers[-1] * theta)
            vecs = [_flatten(p, K) for p in powers]
            dep = _first_dependency(vecs)
            if dep is not None and len(dep) == n + 1:
                self.theta = theta
                self.abs_poly = up.monic(dep)
                self._pow_vecs = vecs[:n]
                self._pmat_inv = _invert_fraction_matrix(
                    [[vecs[j][i] for j in range(n)] for i in range(n)])
                self.abs_field = NumberField(self.abs_poly, name="theta",
                                             check_irreducible=False)
                return
        raise PrecisionUnachievable("no primitive element found (unexpected)")

    def to_abs(self, elt: FieldElement) -> FieldElement:
        if self._identity:
            return elt
        v = _flatten(self.K(elt), self.K)
        c = [sum(self._pmat_inv[i][j] * v[j] for j in range(len(v)))
             for i in range(len(v))]
        return self.abs_field.elem(c)

    def from_abs(self, elt: FieldElement) -> FieldElement:
        if self._identity:
            return elt
        out = self.K.zero()
        for c, pv in zip(elt.coeffs, _powers_of(self.theta, len(elt.coeffs))):
            out = out + pv * c
        return out


def _powers_of(theta: FieldElement, n: int):
    p = theta.parent.one()
    for _ in range(n):
        yield p
        p = p * theta


def _shift_candidates():
    yield from (1, -1, 2, -2, 3, -3, 4, -4, 5, -5)


def _flatten(elt: FieldElement, K: NumberField) -> list[Fraction]:
    """Coefficient vector of elt over Q w.r.t. the product basis of the tower."""
    if K.base is None:
        out = [Fraction(0)] * K.degree
        for i, c in enumerate(elt.coeffs):
            out[i] = c
        return out
    nb = K.base.absolute_degree
    out = [Fraction(0)] * (K.degree * nb)
    for i, c in enumerate(elt.coeffs):
        bvec = _flatten(c, K.base)
        out[i * nb:(i + 1) * nb] = bvec
    return out


def _first_dependency(vecs: list[list[Fraction]]):
    """If vecs[:-1] independent and vecs[-1] dependent on them, return the
    combination [c0..c_{k-1}, 1] with sum c_i vecs[i] + vecs[-1] = 0; also
    detect an earlier dependency (returns shorter list) or None."""
    n = len(vecs[0])
    rows = []    # (reduced vector, combination in terms of original vecs)
    for k, v in enumerate(vecs):
        w = list(v)
        comb = [Fraction(0)] * len(vecs)
        comb[k] = Fraction(1)
        for piv, (rv, rc) in rows:
            f = w[piv]
            if f:
                w = [wi - f * ri for wi, ri in zip(w, rv)]
                comb = [ci - f * rj for ci, rj in zip(comb, rc)]
        piv = next((i for i, wi in enumerate(w) if wi), None)
        if piv is None:
            scale = comb[k]
            return [c / scale for c in comb[:k + 1]]
        inv = Fraction(1) / w[piv]
        rows.append((piv, ([wi * inv for wi in w], [ci * inv for ci in comb])))
    return None


def _invert_fraction_matrix(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _frac_poly_to_sympy(p: list[Fraction], x):
    return sum(sp.Rational(c.numerator, c.denominator) * x ** i
               for i, c in enumerate(p))


def _sympy_poly_to_frac(p, x) -> list[Fraction]:
    poly = sp.Poly(p, x)
    out = [Fraction(0)] * (poly.degree() + 1)
    for (e,), c in poly.terms():
        out[e] = _to_fraction(c)
    return out


def _factor_rational(p: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    x = sp.Symbol("x")
    _, factors = sp.factor_list(_frac_poly_to_sympy(p, x), x)
    return [(_sympy_poly_to_frac(f.as_expr() if isinstance(f, sp.Poly) else f, x), m)
            for f, m in factors]


def _squarefree_decomposition(p: list, field: NumberField | None):
    """Yun's algorithm over any field; returns [(factor, multiplicity)]."""
    p = up.monic(p)
    d = up.deriv(p)
    g = up.gcd_monic(p, d)
    if up.degree(g) == 0:
        return [(p, 1)]
    out = []
    w = up.divmod_poly(p, g)[0]
    y = up.divmod_poly(d, g)[0]
    i = 1
    z = up.sub(y, up.deriv(w))
    while up.degree(w) > 0:
        f = up.gcd_monic(w, z)
        if up.degree(f) > 0:
            out.append((f, i))
        w2 = up.divmod_poly(w, f)[0]
        y2 = up.divmod_poly(z, f)[0]
        z = up.sub(y2, up.deriv(w2))
        w = w2
        i += 1
    return out


def factor_poly(p: list, field: NumberField | None) -> list[tuple[list, int]]:
    """Factor a univariate polynomial over field (None = rationals).

    Returns monic irreducible factors with multiplicities; the leading
    coefficient is dropped.
    """
    if field is None:
        p = [_to_fraction(c) for c in p]
        return [(f, m) for f, m in _factor_rational(p) if up.degree(f) >= 1]
    p = [field(c) for c in p]
    p = up.trim(p)
    if up.degree(p) < 1:
        return []
    out = []
    for sf, mult in _squarefree_decomposition(p, field):
        for f in _factor_squarefree(sf, field):
            out.append((f, mult))
    return out


def _factor_squarefree(f: list, field: NumberField) -> list[list]:
    """Trager's norm method on a monic squarefree polynomial."""
    absd = field.absolute()
    L = absd.abs_field
    fa = [absd.to_abs(c) for c in f]
    if L.degree == 0:
        raise IncompatibleFields("unexpected trivial field")
    x, y = sp.symbols("x y")
    A = _frac_poly_to_sympy([_to_fraction(c) for c in L.defining_polynomial], y)
    theta = L.gen()
    for s in itertools.chain((0,), _shift_candidates()):
        shifted = up.shift_abscissa(fa, theta * (-s)) if s else fa
        G = 0
        for i, c in enumerate(shifted):
            cexpr = _frac_poly_to_sympy(list(c.coeffs), y) if c.coeffs else 0
            G += cexpr * x ** i
        N = sp.resultant(sp.Poly(A, y), sp.Poly(sp.expand(G), y, x), y)
        Npoly = sp.Poly(sp.expand(N), x)
        if sp.degree(sp.gcd(Npoly, Npoly.diff(x)), x) == 0:
            break
    else:
        raise PrecisionUnachievable("no squarefree norm found")
    nfactors = _factor_rational(_sympy_poly_to_frac(Npoly.as_expr(), x))
    result_abs = []
    if len(nfactors) == 1 and nfactors[0][1] == 1:
        result_abs = [fa]
    else:
        for F, _ in nfactors:
            FL = [L(c) for c in F]
            if s:
                FL = up.shift_abscissa(FL, theta * s)
            h = up.gcd_monic(fa, FL)
            if up.degree(h) >= 1:
                result_abs.append(h)
    return [[absd.from_abs(L(c)) for c in h] for h in result_abs]


def poly_roots(p: list, field: NumberField | None) -> list:
    """All roots of p lying in field, with multiplicity."""
    pt = up.trim([field(c) if field is not None else _to_fraction(c) for c in p])
    if not pt:
        raise ValueError("zero polynomial")
    roots = []
    for f, mult in factor_poly(pt, field):
        if up.degree(f) == 1:
            root = -f[0] if field is None else -f[0]
            # monic linear factor x + f0 -> root = -f0
            roots.extend([root] * mult)
    return roots


def _is_irreducible(p: list, base: NumberField | None) -> bool:
    p = up.trim(p)
    if up.degree(p) < 1:
        return False
    if up.degree(p) == 1:
        return True
    if base is None:
        facs = _factor_rational([_to_fraction(c) for c in p])
    else:
        facs = factor_poly(p, base)
    return len(facs) == 1 and facs[0][1] == 1 and up.degree(facs[0][0]) == up.degree(p)


# ---------------------------------------------------------------------------
# the standard tower used throughout the toolkit


def cyclotomic5(name: str = "z") -> NumberField:
    """QQ[zeta_5]."""
    return NumberField([1, 1, 1, 1, 1], name=name, check_irreducible=False)


QZ = cyclotomic5()
"""The cyclotomic field QQ[zeta_5]; zeta = QZ.gen()."""

ZETA = QZ.gen()
SQRT5 = ZETA - ZETA ** 2 - ZETA ** 3 + ZETA ** 4
"""sqrt(5) inside QQ[zeta_5] (positive under zeta -> exp(2 pi i/5))."""

QZI = NumberField([1, 0, 1], base=QZ, name="i", check_irreducible=False)
"""QQ[zeta_5, i]."""

I_QZI = QZI.gen()

QA = NumberField([4, 3, 2, 1], name="alpha", check_irreducible=False)
"""The cubic field QQ[alpha], alpha^3 + 2 alpha^2 + 3 alpha + 4 = 0."""

ALPHA = QA.gen()

QAB = NumberField([ALPHA ** 2 + 2 * ALPHA + 3, ALPHA + 2, QA.one()],
                  base=QA, name="beta", check_irreducible=False)
"""Splitting field QQ[alpha, beta] of the Weierstrass cubic (degree 6)."""

BETA = QAB.gen()
GAMMA = -(QAB(ALPHA) + BETA) - 2

QAB15 = NumberField([15, 0, 1], base=QAB, name="s15", check_irreducible=False)
"""QQ[alpha, beta, i sqrt(15)], home of the non-Weierstrass contact points."""

ISQRT15 = QAB15.gen()

ZETA_EMBEDDING = QZ.embedding_near(complex(mp.cos(2 * mp.pi / 5), mp.sin(2 * mp.pi / 5)))
"""The embedding of QQ[zeta_5] with zeta -> exp(2 pi i / 5)."""
