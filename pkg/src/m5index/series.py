"""Exact truncated Laurent series and Euler-form rational expressions.

Every monomial lives on the rank-4 lattice spanned by ``y1, y2, y, q^(1/2)``.
``y3`` is never stored: it is the monomial ``y1^-1 y2^-1``.  The q-exponent is
kept doubled (``c2``) so that half-integral powers such as ``q^(3/2)`` stay on
an integer lattice.  Truncation is by q-exponent only.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Tuple, Union

Coeff = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for errors raised by the series engine."""


class DenominatorNotExpandable(SeriesError):
    pass


class NonLatticeImage(SeriesError):
    pass


class PoleAtSpecialization(SeriesError):
    pass


class DivergentLimit(SeriesError):
    pass


class ExponentVector(NamedTuple):
    """Monomial ``y1^a1 y2^a2 y^b q^(c2/2)``."""

    a1: int = 0
    a2: int = 0
    b: int = 0
    c2: int = 0

    @property
    def q(self) -> Fraction:
        return Fraction(self.c2, 2)


ONE = ExponentVector(0, 0, 0, 0)
Q = ExponentVector(0, 0, 0, 2)
Y = ExponentVector(0, 0, 1, 0)
Y1 = ExponentVector(1, 0, 0, 0)
Y2 = ExponentVector(0, 1, 0, 0)
Y3 = ExponentVector(-1, -1, 0, 0)


def mono_mul(m1: Tuple[int, ...], m2: Tuple[int, ...]) -> ExponentVector:
    return ExponentVector(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])


def mono_pow(m: Tuple[int, ...], n: int) -> ExponentVector:
    return ExponentVector(m[0] * n, m[1] * n, m[2] * n, m[3] * n)


def mono(a1: int = 0, a2: int = 0, b: int = 0, q: Union[int, Fraction] = 0) -> ExponentVector:
    """Build a monomial with the q-exponent given in ordinary (not doubled) units."""
    c2 = Fraction(q) * 2
    if c2.denominator != 1:
        raise NonLatticeImage(f"q-exponent {q} is not a half-integer")
    return ExponentVector(a1, a2, b, int(c2))


def normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _div(c: Coeff, d: int) -> Coeff:
    if isinstance(c, int):
        qt, r = divmod(c, d)
        if r == 0:
            return qt
    return normalize(Fraction(c) / d)


def _order_str(order2: Optional[int]) -> str:
    if order2 is None:
        return "exact"
    return str(Fraction(order2, 2))


def to_order2(order: Union[int, Fraction, str, None]) -> Optional[int]:
    """Convert a q-order given in q units (int, Fraction, '7/2') to doubled units."""
    if order is None:
        return None
    o = Fraction(order) * 2
    if o.denominator != 1:
        raise SeriesError(f"q-order {order} is not a half-integer")
    return int(o)


class TruncatedSeries:
    """Finite map from exponent vectors to exact rationals, known below ``q_order``.

    ``order2`` is the truncation order in doubled units; ``None`` means the
    series is an exact Laurent polynomial.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "order2")

    def __init__(self, terms: Union[Mapping, Iterable] = (), order2: Optional[int] = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[ExponentVector, Coeff] = {}
        for e, c in items:
            if order2 is not None and e[3] >= order2:
                continue
            e = e if isinstance(e, ExponentVector) else ExponentVector(*e)
            acc[e] = acc.get(e, 0) + c
        clean = {e: normalize(c) for e, c in acc.items() if c}
        self._terms = clean
        self.order2 = order2

    @classmethod
    def _raw(cls, terms: Dict, order2: Optional[int]) -> "TruncatedSeries":
        # trusted constructor: terms already pruned, truncated and keyed by tuples
        s = object.__new__(cls)
        s._terms = {e if isinstance(e, ExponentVector) else ExponentVector(*e): normalize(c)
                    for e, c in terms.items() if c}
        s.order2 = order2
        return s

    # -- constructors ----------------------------------------------------
    @classmethod
    def monomial(cls, e: Tuple[int, ...], coeff: Coeff = 1, order2: Optional[int] = None):
        return cls({ExponentVector(*e): coeff}, order2)

    @classmethod
    def one(cls, order2: Optional[int] = None) -> "TruncatedSeries":
        return cls({ONE: 1}, order2)

    @classmethod
    def zero(cls, order2: Optional[int] = None) -> "TruncatedSeries":
        return cls({}, order2)

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[Coeff], order2: Optional[int] = None):
        """Univariate series ``sum_n coeffs[n] q^n``."""
        return cls({ExponentVector(0, 0, 0, 2 * n): c for n, c in enumerate(coeffs)}, order2)

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> Mapping[ExponentVector, Coeff]:
        return dict(self._terms)

    @property
    def q_order(self) -> Optional[Fraction]:
        return None if self.order2 is None else Fraction(self.order2, 2)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, e) -> Coeff:
        return self._terms.get(tuple(e), 0)

    def coefficient(self, e) -> Coeff:
        e = tuple(e)
        if self.order2 is not None and e[3] >= self.order2:
            raise SeriesError(f"coefficient of {e} lies beyond the truncation order")
        return self._terms.get(e, 0)

    def valuation2(self) -> Optional[int]:
        """Smallest doubled q-exponent present, ``None`` for the zero series."""
        return min((e[3] for e in self._terms), default=None)

    def is_exact(self) -> bool:
        return self.order2 is None

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: (t[0][3], t[0][0], t[0][1], t[0][2]))

    def q_slice(self, c2: int) -> "TruncatedSeries":
        return TruncatedSeries._raw({e: c for e, c in self._terms.items() if e[3] == c2}, None)

    def levels(self) -> Dict[int, Dict[Tuple[int, int, int], Coeff]]:
        out: Dict[int, Dict] = defaultdict(dict)
        for e, c in self._terms.items():
            out[e[3]][(e[0], e[1], e[2])] = c
        return dict(out)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _min_order(a: Optional[int], b: Optional[int]) -> Optional[int]:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def truncate(self, order2: Optional[int]) -> "TruncatedSeries":
        if order2 is None:
            return self
        if self.order2 is not None and order2 > self.order2:
            raise SeriesError(
                f"cannot raise truncation order from {_order_str(self.order2)} to {_order_str(order2)}")
        return TruncatedSeries._raw({e: c for e, c in self._terms.items() if e[3] < order2}, order2)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Rational)):
            return TruncatedSeries({ONE: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order2 = self._min_order(self.order2, other.order2)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        if order2 is not None:
            out = {e: c for e, c in out.items() if e[3] < order2}
        return TruncatedSeries._raw(out, order2)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw({e: -c for e, c in self._terms.items()}, self.order2)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> "TruncatedSeries":
        return TruncatedSeries._raw({e: v * c for e, v in self._terms.items()}, self.order2)

    def shift(self, m: Tuple[int, ...]) -> "TruncatedSeries":
        """Multiply by the monomial ``m``."""
        order2 = None if self.order2 is None else self.order2 + m[3]
        return TruncatedSeries._raw({mono_mul(e, m): c for e, c in self._terms.items()}, order2)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, TruncatedSeries):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise SeriesError("negative powers are not supported; use EulerExpr")
        result = TruncatedSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_exponents(self, fn, order2: Optional[int] = "same") -> "TruncatedSeries":
        """Apply ``fn`` to every exponent vector and re-collect coefficients."""
        out: Dict = {}
        for e, c in self._terms.items():
            e2 = fn(e)
            out[e2] = out.get(e2, 0) + c
        return TruncatedSeries(out, self.order2 if order2 == "same" else order2)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)) and not isinstance(other, TruncatedSeries):
            other = TruncatedSeries({ONE: other}, self.order2)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order2 == other.order2 and self._terms == other._terms

    def __hash__(self):
        return hash((self.order2, frozenset(self._terms.items())))

    def agrees_with(self, other: "TruncatedSeries", order2: Optional[int] = None) -> bool:
        """Equality of all coefficients below ``order2`` (default: the common order)."""
        if order2 is None:
            order2 = self._min_order(self.order2, other.order2)
        for s in (self, other):
            if s.order2 is not None and order2 is not None and order2 > s.order2:
                raise SeriesError("comparison order exceeds truncation order")
        return self.truncate(order2)._terms == other.truncate(order2)._terms

    def __repr__(self) -> str:
        from .render import render_series
        return f"TruncatedSeries({render_series(self)})"

    def __str__(self) -> str:
        from .render import render_series
        return render_series(self)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated where either factor stops being known."""
    va, vb = a.valuation2(), b.valuation2()
    if va is None or vb is None:
        cand = [o for o in (a.order2, b.order2) if o is not None]
        return TruncatedSeries.zero(min(cand) if cand else None)
    limits = []
    if a.order2 is not None:
        limits.append(a.order2 + vb)
    if b.order2 is not None:
        limits.append(b.order2 + va)
    order2 = min(limits) if limits else None

    la, lb = a.levels(), b.levels()
    out: Dict[Tuple[int, int, int, int], Coeff] = {}
    for ca, sa in la.items():
        for cb, sb in lb.items():
            c = ca + cb
            if order2 is not None and c >= order2:
                continue
            for (x1, x2, x3), u in sa.items():
                for (z1, z2, z3), v in sb.items():
                    k = (x1 + z1, x2 + z2, x3 + z3, c)
                    out[k] = out.get(k, 0) + u * v
    return TruncatedSeries._raw(out, order2)


def laurent(terms: Mapping) -> TruncatedSeries:
    """Exact Laurent polynomial from ``{exponent: coeff}``."""
    return TruncatedSeries(terms, None)


class EulerExpr:
    """``numerator / prod_i (1 - m_i)`` with a Laurent-polynomial numerator.

    ``denominators`` is a multiset of monomials, stored as a sorted tuple.
    """

    __slots__ = ("numerator", "denominators")

    def __init__(self, numerator: Union[TruncatedSeries, Mapping, Coeff],
                 denominators: Iterable[Tuple[int, ...]] = ()):
        if isinstance(numerator, (int, Rational)) and not isinstance(numerator, TruncatedSeries):
            numerator = TruncatedSeries({ONE: numerator})
        elif not isinstance(numerator, TruncatedSeries):
            numerator = TruncatedSeries(numerator)
        if not numerator.is_exact():
            raise SeriesError("EulerExpr numerator must be an exact Laurent polynomial")
        self.numerator = numerator
        self.denominators = tuple(sorted(ExponentVector(*m) for m in denominators))

    def __repr__(self) -> str:
        from .render import render_euler
        return f"EulerExpr({render_euler(self)})"

    __str__ = __repr__

    def __mul__(self, other) -> "EulerExpr":
        if isinstance(other, EulerExpr):
            return EulerExpr(self.numerator * other.numerator, self.denominators + other.denominators)
        if isinstance(other, TruncatedSeries) or isinstance(other, (int, Rational)):
            return EulerExpr(self.numerator * other, self.denominators)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "EulerExpr":
        return EulerExpr(-self.numerator, self.denominators)

    def _common(self, other: "EulerExpr"):
        ca, cb = Counter(self.denominators), Counter(other.denominators)
        union = ca | cb
        extra_a = list((union - ca).elements())
        extra_b = list((union - cb).elements())
        return list(union.elements()), extra_a, extra_b

    def __add__(self, other) -> "EulerExpr":
        if isinstance(other, (int, Rational, TruncatedSeries)):
            other = EulerExpr(other)
        if not isinstance(other, EulerExpr):
            return NotImplemented
        dens, ea, eb = self._common(other)
        num = self.numerator * denominator_polynomial(ea) + other.numerator * denominator_polynomial(eb)
        return EulerExpr(num, dens)

    __radd__ = __add__

    def __sub__(self, other) -> "EulerExpr":
        return self + (-other)

    def equals(self, other: "EulerExpr") -> bool:
        """Exact equality as rational functions (cross-multiplication)."""
        _, ea, eb = self._common(other)
        return (self.numerator * denominator_polynomial(ea)
                == other.numerator * denominator_polynomial(eb))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EulerExpr):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        raise TypeError("EulerExpr is unhashable: equality is rational-function equality")

    def map_exponents(self, fn) -> "EulerExpr":
        return EulerExpr(self.numerator.map_exponents(fn, None), [fn(m) for m in self.denominators])

    def expand(self, order) -> TruncatedSeries:
        return euler_expand(self, order)


def denominator_polynomial(factors: Iterable[Tuple[int, ...]]) -> TruncatedSeries:
    """``prod (1 - m)`` as an exact polynomial."""
    p = TruncatedSeries.one()
    for m in factors:
        p = p * TruncatedSeries({ONE: 1, ExponentVector(*m): -1})
    return p


def geometric_divide(s: TruncatedSeries, m: Tuple[int, ...], order2: int) -> TruncatedSeries:
    """Return ``s / (1 - m)`` expanded below ``order2``; ``m`` must have positive q-degree."""
    dm = m[3]
    if dm <= 0:
        raise DenominatorNotExpandable(f"denominator factor (1 - {m}) has q-exponent <= 0")
    levels: Dict[int, Dict[Tuple[int, int, int], Coeff]] = defaultdict(dict)
    for e, c in s._terms.items():
        if e[3] < order2:
            levels[e[3]][(e[0], e[1], e[2])] = c
    if not levels:
        return TruncatedSeries.zero(order2)
    m1, m2, m3 = m[0], m[1], m[2]
    lvl = min(levels)
    while lvl < order2:
        cur = levels.get(lvl)
        if cur:
            nxt = lvl + dm
            if nxt < order2:
                tgt = levels[nxt]
                for (x1, x2, x3), c in cur.items():
                    k = (x1 + m1, x2 + m2, x3 + m3)
                    tgt[k] = tgt.get(k, 0) + c
        lvl += 1
    out = {(k[0], k[1], k[2], c2): v for c2, sl in levels.items() for k, v in sl.items()}
    return TruncatedSeries._raw(out, order2)


def euler_expand(e: EulerExpr, order) -> TruncatedSeries:
    """Expand an Euler expression in ascending powers of q below ``order`` (q units)."""
    order2 = to_order2(order)
    for m in e.denominators:
        if m[3] <= 0:
            raise DenominatorNotExpandable(
                f"denominator factor 1 - {tuple(m)} has non-positive q-exponent")
    s = TruncatedSeries._raw({k: c for k, c in e.numerator.terms.items() if k[3] < order2}, order2)
    for m in e.denominators:
        s = geometric_divide(s, m, order2)
    return s
