"""Laurent polynomials, rational functions and the cluster X-functor.

Characters of the torus are written ``z^m`` with ``m`` an integer vector in
the character basis of the fixed data (the ``n_basis`` when present,
otherwise the initial basis of ``N°``). All seeds of one fixed data share this
torus, so an :class:`XMap` is simply a tuple of pullback images of the basis
characters.

Polynomials are sparse dicts ``{exponent tuple: int}``. Large products and
the optional gcd reduction are delegated to FLINT through ``python-flint``.
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

import flint

from . import linalg as la
from .errors import NonIntegralExponent, NotComposable, PoleAtPoint
from .lattice import ClusterWord, IsoStep, MutationStep, Seed, make_isomorphism, mutate_seed

DEFAULT_SIMPLIFY_THRESHOLD = 10
# 2**62 - 57, the largest prime below 2**62
MODULUS = 4611686018427387847
FLINT_MUL_CUTOFF = 4000


def _grlex(exp):
    return (sum(exp), exp)


def _flint_ctx(nvars: int):
    return flint.fmpz_mpoly_ctx.get(tuple(f"z{i}" for i in range(nvars)), "lex")


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients.

    >>> x = LaurentPoly.monomial((1, 0))
    >>> ((x + 1) * (x - 1)).to_text()
    '1 * z^(2,0) + -1 * z^(0,0)'
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: int = 1) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        exp = tuple(int(x) for x in exp)
        return cls._raw(len(exp), {exp: coeff} if coeff else {})

    def __len__(self):
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * self.nvars) == 1

    def single(self):
        """``(exp, coeff)`` if this is a single term, else None."""
        if len(self.terms) == 1:
            return next(iter(self.terms.items()))
        return None

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp: Sequence[int]) -> "LaurentPoly":
        """Multiply by ``z^exp``."""
        if not any(exp):
            return self
        add = operator.add
        return LaurentPoly._raw(
            self.nvars, {tuple(map(add, e, exp)): c for e, c in self.terms.items()}
        )

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if not a.terms or not b.terms:
            return LaurentPoly.zero(self.nvars)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        s = b.single()
        if s is not None:
            e, c = s
            return a.shift(e).scale(c) if c != 1 else a.shift(e)
        if len(a.terms) * len(b.terms) >= FLINT_MUL_CUTOFF:
            return _flint_mul(a, b)
        out: dict = {}
        add = operator.add
        get = out.get
        for eb, cb in b.terms.items():
            for ea, ca in a.terms.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            s = self.single()
            if s is None or abs(s[1]) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            e, c = s
            return LaurentPoly.monomial(tuple(-k * x for x in e), c ** (-k))
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.nvars, other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def content(self) -> tuple:
        """Componentwise minimum exponent (the monomial content)."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(map(min, zip(*self.terms)))

    def max_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(map(max, zip(*self.terms)))

    def coeff_gcd(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def leading(self):
        """Leading ``(exp, coeff)`` in graded-lex order."""
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def is_subtraction_free(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def evaluate(self, point: Sequence):
        """Value at a point of nonzero numbers (Fractions, ints or floats)."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    if x == 0 and k < 0:
                        raise PoleAtPoint("zero coordinate raised to a negative power")
                    v = v * (Fraction(x) ** k if isinstance(x, int) else x**k)
            total = total + v
        return total

    def evaluate_mod(self, point: Sequence[int], p: int = MODULUS) -> int:
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, p) % p
            total += v
        return total % p

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c} * z^({','.join(str(x) for x in e)})" for e, c in self.sorted_terms()
        )

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"

    # -- flint bridge -------------------------------------------------------

    def to_flint(self):
        """``(shift, poly)`` with ``self = z^shift * poly`` and ``poly`` a polynomial."""
        sh = self.content()
        ctx = _flint_ctx(self.nvars)
        sub = operator.sub
        poly = ctx.from_dict({tuple(map(sub, e, sh)): c for e, c in self.terms.items()})
        return sh, poly

    @classmethod
    def from_flint(cls, nvars: int, poly, shift=None) -> "LaurentPoly":
        terms = {tuple(int(x) for x in e): int(c) for e, c in poly.to_dict().items()}
        p = cls._raw(nvars, terms)
        return p.shift(shift) if shift is not None else p


def _flint_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    sa, pa = a.to_flint()
    sb, pb = b.to_flint()
    return LaurentPoly.from_flint(a.nvars, pa * pb, tuple(map(operator.add, sa, sb)))


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd with trivial monomial content and positive leading coefficient."""
    g = a.to_flint()[1].gcd(b.to_flint()[1])
    return LaurentPoly.from_flint(a.nvars, g)


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """``a / b`` for ``b`` dividing ``a`` in the Laurent ring."""
    sa, pa = a.to_flint()
    sb, pb = b.to_flint()
    q = pa / pb
    return LaurentPoly.from_flint(a.nvars, q, tuple(map(operator.sub, sa, sb)))


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return num, LaurentPoly.const(den.nvars, 1)
    c = den.content()
    if any(c):
        neg = tuple(-x for x in c)
        num, den = num.shift(neg), den.shift(neg)
    g = gcd(num.coeff_gcd(), den.coeff_gcd())
    if den.leading()[1] < 0:
        g = -g
    if g != 1:
        num = LaurentPoly._raw(num.nvars, {e: v // g for e, v in num.terms.items()})
        den = LaurentPoly._raw(den.nvars, {e: v // g for e, v in den.terms.items()})
    return num, den


class RationalFn:
    """``num / den`` in weak canonical form.

    The denominator carries no monomial content and has a positive leading
    coefficient (graded-lex), and the common integer content is removed.
    Equality is decided by cross-multiplication, so no gcd is needed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.const(num.nvars, 1)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "RationalFn":
        exp = tuple(exp)
        return cls._raw(LaurentPoly.monomial(exp, coeff), LaurentPoly.const(len(exp), 1))

    @classmethod
    def const(cls, nvars: int, c: int = 1) -> "RationalFn":
        return cls._raw(LaurentPoly.const(nvars, c), LaurentPoly.const(nvars, 1))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def size(self) -> int:
        return len(self.num) + len(self.den)

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFn(other)
        if isinstance(other, int):
            return RationalFn.const(self.nvars, other)
        return NotImplemented

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            if self.num.is_zero:
                raise ZeroDivisionError("zero to a negative power")
            return RationalFn(self.den**-k, self.num**-k)
        return RationalFn._raw(*_normalize(self.num**k, self.den**k))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ratfn_equal(self, other)

    __hash__ = None

    def reduced(self) -> "RationalFn":
        """Full gcd reduction of numerator and denominator."""
        if self.num.is_zero or len(self.den) == 1:
            return self
        g = laurent_gcd(self.num, self.den)
        if g.is_one():
            return self
        return RationalFn(exact_divide(self.num, g), exact_divide(self.den, g))

    def maybe_reduced(self, threshold: int | None) -> "RationalFn":
        if threshold is not None and self.size() > threshold:
            return self.reduced()
        return self

    def as_monomial(self):
        """``(coeff, exp)`` when this is ``coeff * z^exp``, else None.

        No gcd is needed: a monomial quotient forces ``num`` to be ``den``
        shifted and scaled, which the leading terms pin down.
        """
        if self.num.is_zero:
            return None
        en, cn = self.num.leading()
        ed, cd = self.den.leading()
        exp = tuple(map(operator.sub, en, ed))
        if len(self.num) != len(self.den):
            return None
        if cn % cd:
            return None
        c = cn // cd
        if self.num != self.den.shift(exp).scale(c):
            return None
        return c, exp

    def is_subtraction_free(self) -> bool:
        return self.num.is_subtraction_free() and self.den.is_subtraction_free()

    def evaluate(self, point: Sequence):
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleAtPoint("denominator vanishes at the point")
        n = self.num.evaluate(point)
        if isinstance(n, Fraction) or isinstance(d, Fraction):
            return la.norm(Fraction(n) / Fraction(d))
        return n / d

    def evaluate_mod(self, point: Sequence[int], p: int = MODULUS) -> int:
        d = self.den.evaluate_mod(point, p)
        if d == 0:
            raise PoleAtPoint("denominator vanishes modulo p")
        return self.num.evaluate_mod(point, p) * pow(d, -1, p) % p

    def to_text(self) -> str:
        if self.den.is_one():
            return f"({self.num.to_text()}) / (1)"
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def __repr__(self):
        return f"RationalFn({self.to_text()})"


def ratfn_equal(a: RationalFn, b: RationalFn) -> bool:
    """Exact equality by cross-multiplication."""
    if a.nvars != b.nvars:
        return False
    if a.den == b.den:
        return a.num == b.num
    if a.num.is_zero or b.num.is_zero:
        return a.num.is_zero and b.num.is_zero
    return a.num * b.den == b.num * a.den


# -- X-maps -------------------------------------------------------------------


def _unit(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class _MutationData:
    v: tuple  # exponent of the binomial 1 + z^v
    powers: tuple  # exponent of the binomial for each basis character


@dataclass(frozen=True)
class _MonomialData:
    cols: tuple  # image exponent of each basis character


def _step_data(seed: Seed, step) -> tuple:
    """Structured pullback of one step at ``seed``; also returns the target seed."""
    fixed = seed.fixed
    n = fixed.rank
    cb = fixed.char_basis
    if isinstance(step, MutationStep):
        k = fixed.index(step.k)
        ek = seed.e(k)
        v = fixed.to_char(ek)
        if not la.is_integral(v):
            raise NonIntegralExponent("e_k is not an integral character")
        v = tuple(step.sign * x for x in la.to_int(v))
        powers = []
        for b in range(n):
            p = fixed.form(ek, la.column(cb, b))
            if not la.is_integral(p):
                raise NonIntegralExponent(f"{{e_k, n_{b}}} = {p} is not an integer")
            powers.append(int(p))
        return _MutationData(v, tuple(powers)), mutate_seed(seed, step)
    iso = make_isomorphism(seed, step)
    minv = la.inverse(iso.matrix)
    q = la.mat_mul(la.mat_mul(fixed.char_basis_inv, minv), cb)
    cols = tuple(tuple(iso.sign * int(x) for x in la.column(q, b)) for b in range(n))
    return _MonomialData(cols), iso.target


@dataclass(frozen=True)
class XMap:
    """Pullbacks of the basis characters along a cluster transformation."""

    source: Seed
    target: Seed
    images: tuple
    _data: object = field(default=None, compare=False, repr=False)

    @property
    def nvars(self) -> int:
        return len(self.images)

    def pullback(self, exp: Sequence[int]) -> RationalFn:
        """Pullback of the character ``z^exp``."""
        return _monomial_in(self.images, exp)

    def to_text(self) -> list[str]:
        return [r.to_text() for r in self.images]


def _monomial_in(images: Sequence[RationalFn], exp: Sequence[int]) -> RationalFn:
    n = len(images)
    num = LaurentPoly.const(n, 1)
    den = LaurentPoly.const(n, 1)
    for r, k in zip(images, exp):
        if k > 0:
            num = num * r.num**k
            den = den * r.den**k
        elif k < 0:
            num = num * r.den**-k
            den = den * r.num**-k
    return RationalFn(num, den)


def xmap_identity(seed: Seed) -> XMap:
    n = seed.rank
    return XMap(seed, seed, tuple(RationalFn.monomial(_unit(n, i)) for i in range(n)))


def xmap_of_step(seed: Seed, step) -> XMap:
    """The pullback of one mutation or isomorphism at ``seed``.

    ``mu_k^sign``: ``z^n -> z^n (1 + z^{sign e_k})^{{e_k, n}}``;
    ``sign sigma``: ``z^m -> z^{sign sigma^{-1}(m)}``.
    """
    data, target = _step_data(seed, step)
    n = seed.rank
    if isinstance(data, _MutationData):
        one = LaurentPoly.const(n, 1)
        binom = one + LaurentPoly.monomial(data.v)
        images = []
        for b, p in enumerate(data.powers):
            z = LaurentPoly.monomial(_unit(n, b))
            if p >= 0:
                images.append(RationalFn(z * binom**p, one))
            else:
                images.append(RationalFn(z, binom**-p))
    else:
        images = [RationalFn.monomial(c) for c in data.cols]
    for r in images:
        if not r.is_subtraction_free():
            raise AssertionError("generator pullback is not subtraction-free")
    return XMap(seed, target, tuple(images), data)


def _compose_structured(data, target: Seed, inner: XMap, threshold) -> XMap:
    if isinstance(data, _MonomialData):
        images = tuple(inner.pullback(c).maybe_reduced(threshold) for c in data.cols)
        return XMap(inner.source, target, images)
    w = inner.pullback(data.v)
    binom = RationalFn(w.den + w.num, w.den).maybe_reduced(threshold)
    cache: dict = {0: None}
    images = []
    for b, p in enumerate(data.powers):
        r = inner.images[b]
        if p:
            if p not in cache:
                cache[p] = binom**p
            r = r * cache[p]
        images.append(r.maybe_reduced(threshold))
    return XMap(inner.source, target, tuple(images))


def xmap_compose(outer: XMap, inner: XMap, threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD) -> XMap:
    """Pullback of ``outer o inner``: inner's images substituted into outer's."""
    if inner.target != outer.source:
        raise NotComposable("inner target differs from outer source")
    if outer._data is not None:
        return _compose_structured(outer._data, outer.target, inner, threshold)
    images = tuple(substitute(r, inner.images).maybe_reduced(threshold) for r in outer.images)
    return XMap(inner.source, outer.target, images)


def substitute(r: RationalFn, images: Sequence[RationalFn]) -> RationalFn:
    """``r`` with each basis character ``z^{u_b}`` replaced by ``images[b]``."""
    num_n, num_d = _substitute_poly(r.num, images)
    den_n, den_d = _substitute_poly(r.den, images)
    return RationalFn(num_n * den_d, num_d * den_n)


def _substitute_poly(poly: LaurentPoly, images: Sequence[RationalFn]):
    """``(P, D)`` with ``poly(images) = P / D``.

    ``D = prod q_i^{H_i} p_i^{L_i}`` where ``images[i] = p_i / q_i`` and
    ``H``/``L`` bound the positive/negative exponents; each term contributes
    ``c * prod p_i^{e_i + L_i} q_i^{H_i - e_i}`` (both powers nonnegative).
    """
    n = len(images)
    if poly.is_zero:
        return LaurentPoly.zero(n), LaurentPoly.const(n, 1)
    lo = poly.content()
    hi = poly.max_exponents()
    big_h = [max(h, 0) for h in hi]
    big_l = [max(-l, 0) for l in lo]
    pcache: list[dict] = [dict() for _ in range(n)]
    qcache: list[dict] = [dict() for _ in range(n)]

    def pw(cache, base, k):
        if k not in cache:
            cache[k] = base**k
        return cache[k]

    total = LaurentPoly.zero(n)
    for e, c in poly.terms.items():
        t = LaurentPoly.const(n, c)
        for i, k in enumerate(e):
            a, b = k + big_l[i], big_h[i] - k
            if a:
                t = t * pw(pcache[i], images[i].num, a)
            if b:
                t = t * pw(qcache[i], images[i].den, b)
        total = total + t
    d = LaurentPoly.const(n, 1)
    for i in range(n):
        if big_h[i]:
            d = d * pw(qcache[i], images[i].den, big_h[i])
        if big_l[i]:
            d = d * pw(pcache[i], images[i].num, big_l[i])
    return total, d


def evaluate_word(word: ClusterWord, threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD) -> XMap:
    """``X(word)`` as a single XMap from the word's source seed."""
    acc = xmap_identity(word.source)
    seed = word.source
    for st in word.steps:
        data, target = _step_data(seed, st)
        acc = _compose_structured(data, target, acc, threshold)
        seed = target
    return acc


def xmap_is_identity(m: XMap) -> bool:
    n = m.nvars
    return all(
        ratfn_equal(r, RationalFn.monomial(_unit(n, i))) for i, r in enumerate(m.images)
    )


def xmaps_equal(a: XMap, b: XMap) -> bool:
    return a.nvars == b.nvars and all(ratfn_equal(x, y) for x, y in zip(a.images, b.images))


# -- numeric evaluation ---------------------------------------------------------


def xmap_evaluate(m: XMap, point: Sequence):
    """Images of the basis characters at ``point`` (exact or floating)."""
    point = [la.parse_number(x) if isinstance(x, str) else x for x in point]
    return tuple(r.evaluate(point) for r in m.images)


def xmap_evaluate_exact(m: XMap, point: Sequence) -> tuple:
    """Exact images at a rational point, returned as ``flint.fmpq``.

    Each image is cleared to ``N / D`` over the integers with a shared shift
    ``prod p_i^{-lo_i} q_i^{hi_i}``, so only one gcd is taken per image.
    """
    xs = [x if isinstance(x, flint.fmpq) else flint.fmpq(Fraction(x).numerator, Fraction(x).denominator)
          for x in point]
    if any(x == 0 for x in xs):
        raise PoleAtPoint("zero coordinate")
    ps = [flint.fmpz(x.p) for x in xs]
    qs = [flint.fmpz(x.q) for x in xs]
    cache: dict = {}

    def power(base, i, k):
        key = (base, i, k)
        v = cache.get(key)
        if v is None:
            v = (ps if base == 0 else qs)[i] ** k
            cache[key] = v
        return v

    out = []
    for r in m.images:
        exps = list(r.num.terms) + list(r.den.terms)
        lo = [min(e[i] for e in exps) for i in range(len(xs))]
        hi = [max(e[i] for e in exps) for i in range(len(xs))]

        def clear(poly):
            total = flint.fmpz(0)
            for e, c in poly.terms.items():
                t = flint.fmpz(c)
                for i, k in enumerate(e):
                    if k - lo[i]:
                        t *= power(0, i, k - lo[i])
                    if hi[i] - k:
                        t *= power(1, i, hi[i] - k)
                total += t
            return total

        d = clear(r.den)
        if d == 0:
            raise PoleAtPoint("denominator vanishes at the point")
        out.append(flint.fmpq(clear(r.num), d))
    return tuple(out)


def _mono_value(point, exp, mod):
    v = 1
    for x, k in zip(point, exp):
        if k:
            if mod is not None:
                v = v * pow(x, k, mod) % mod
            else:
                if x == 0 and k < 0:
                    raise PoleAtPoint("zero coordinate raised to a negative power")
                v = v * (Fraction(x) ** k if isinstance(x, int) else x**k)
    return v


def _apply_data(data, point, mod=None):
    if isinstance(data, _MonomialData):
        return tuple(_mono_value(point, c, mod) for c in data.cols)
    w = _mono_value(point, data.v, mod) + 1
    if mod is not None:
        w %= mod
    out = []
    for x, p in zip(point, data.powers):
        if p < 0 and w == 0:
            raise PoleAtPoint("1 + z^v vanishes at the point")
        if mod is not None:
            out.append(x * pow(w, p, mod) % mod)
        else:
            out.append(x * (Fraction(w) ** p if isinstance(w, int) else w**p))
    return tuple(out)


class WordPointMap:
    """Generator-by-generator point map of a word, without symbolic composition."""

    def __init__(self, word: ClusterWord):
        self.word = word
        self.data = []
        seed = word.source
        for st in word.steps:
            d, seed = _step_data(seed, st)
            self.data.append(d)
        self.target = seed

    def __call__(self, point: Sequence, mod: int | None = None) -> tuple:
        x = tuple(point)
        for d in self.data:
            x = _apply_data(d, x, mod)
        if mod is None:
            x = tuple(la.norm(v) if isinstance(v, Fraction) else v for v in x)
        return x


def fast_reject(word: ClusterWord, trials: int = 3, rng: random.Random | None = None) -> bool:
    """True when modular evaluation proves the word's X-map is not the identity."""
    rng = rng or random.Random(0x5EED)
    pm = WordPointMap(word)
    n = word.source.rank
    for _ in range(trials):
        for _attempt in range(8):
            x = tuple(rng.randrange(2, MODULUS - 1) for _ in range(n))
            try:
                y = pm(x, MODULUS)
            except PoleAtPoint:
                continue
            if y != x:
                return True
            break
    return False


def is_trivial_word(
    word: ClusterWord,
    fast_path: bool = True,
    threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD,
) -> bool:
    """Same seed at both ends and identity X-map.

    The modular pre-check can only reject; acceptance always comes from the
    symbolic composition.
    """
    if word.target != word.source:
        return False
    if fast_path and fast_reject(word):
        return False
    return xmap_is_identity(evaluate_word(word, threshold))
