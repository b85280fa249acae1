"""Variable frames, specialization and the minimal-reduction limit.

A frame names a presentation of the fugacity lattice.  Series and Euler
expressions are always stored canonically (``y1, y2, y, q``); a frame only
translates between its own variable exponents and canonical exponent vectors.

Frame exponents are tuples with one entry per frame variable.  The entry for
``q`` is a :class:`~fractions.Fraction` and may be half-integral; every other
entry is an integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .series import (
    DivergentLimit,
    EulerExpr,
    ExponentVector,
    NonLatticeImage,
    PoleAtSpecialization,
    SeriesError,
    TruncatedSeries,
)

FrameExps = Tuple[Union[int, Fraction], ...]


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list:
    """Solve a small square system exactly (Gauss-Jordan over the rationals)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


@dataclass(frozen=True)
class VariableFrame:
    """An integer-linear presentation of the canonical lattice.

    ``generators[i]`` is the canonical exponent vector (q doubled) of the i-th
    frame variable, where the generator of ``q`` itself is ``(0, 0, 0, 2)``.
    ``derived`` lists display-only monomials such as ``y3``.
    """

    name: str
    variables: Tuple[str, ...]
    generators: Tuple[ExponentVector, ...]
    derived: Mapping[str, ExponentVector] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.variables) != len(self.generators):
            raise ValueError("one generator per variable")

    @property
    def square(self) -> bool:
        return len(self.variables) == 4

    def generator(self, var: str) -> ExponentVector:
        if var in self.variables:
            return self.generators[self.variables.index(var)]
        if var in self.derived:
            return self.derived[var]
        raise KeyError(f"frame {self.name!r} has no variable {var!r}")

    def to_canonical(self, exps: Union[FrameExps, Mapping[str, Union[int, Fraction]]]) -> ExponentVector:
        if isinstance(exps, Mapping):
            total = [Fraction(0)] * 4
            for var, e in exps.items():
                g = self.generator(var)
                for i in range(4):
                    total[i] += Fraction(e) * g[i]
        else:
            total = [Fraction(0)] * 4
            for e, g in zip(exps, self.generators):
                for i in range(4):
                    total[i] += Fraction(e) * g[i]
        if any(t.denominator != 1 for t in total):
            raise NonLatticeImage(f"{exps} in frame {self.name!r} is not a lattice point")
        return ExponentVector(*(int(t) for t in total))

    def from_canonical(self, e: Sequence[int]) -> FrameExps:
        if self.name == "zw":
            return _zw_presentation(e)
        cols = [[self.generators[j][i] for j in range(4)] for i in range(4)]
        sol = _solve(cols, e)
        out = []
        for var, x in zip(self.variables, sol):
            if var == "q":
                if (2 * x).denominator != 1:
                    raise NonLatticeImage(f"{tuple(e)} has no half-integral q-power in {self.name!r}")
                out.append(x)
            else:
                if x.denominator != 1:
                    raise NonLatticeImage(f"{tuple(e)} is not a lattice point of frame {self.name!r}")
                out.append(int(x))
        return tuple(out)


Y_FRAME = VariableFrame(
    "y",
    ("y1", "y2", "y", "q"),
    (ExponentVector(1, 0, 0, 0), ExponentVector(0, 1, 0, 0), ExponentVector(0, 0, 1, 0),
     ExponentVector(0, 0, 0, 2)),
    {"y3": ExponentVector(-1, -1, 0, 0)},
)

# y1 = t1^-1, y2 = t1 t2^-1, y3 = t2, y = q^(1/2) r
T_FRAME = VariableFrame(
    "t",
    ("t1", "t2", "r", "q"),
    (ExponentVector(-1, 0, 0, 0), ExponentVector(-1, -1, 0, 0), ExponentVector(0, 0, 1, -1),
     ExponentVector(0, 0, 0, 2)),
)

# x = q y
X_FRAME = VariableFrame(
    "x",
    ("y1", "y2", "x", "q"),
    (ExponentVector(1, 0, 0, 0), ExponentVector(0, 1, 0, 0), ExponentVector(0, 0, 1, 2),
     ExponentVector(0, 0, 0, 2)),
    {"y3": ExponentVector(-1, -1, 0, 0)},
)

# z_i = y_i q, w1 = y q, w2 = y^-1 q^2; z1 z2 z3 = w1 w2
ZW_FRAME = VariableFrame(
    "zw",
    ("z1", "z2", "z3", "w1", "w2"),
    (ExponentVector(1, 0, 0, 2), ExponentVector(0, 1, 0, 2), ExponentVector(-1, -1, 0, 2),
     ExponentVector(0, 0, 1, 2), ExponentVector(0, 0, -1, 4)),
)

FRAMES: Dict[str, VariableFrame] = {f.name: f for f in (Y_FRAME, T_FRAME, X_FRAME, ZW_FRAME)}
FRAME_ALIASES = {"canonical": "y", "canonical-y": "y", "y-frame": "y", "t-frame": "t",
                 "x-frame": "x", "zw-frame": "zw"}


def get_frame(frame: Union[str, VariableFrame]) -> VariableFrame:
    if isinstance(frame, VariableFrame):
        return frame
    name = FRAME_ALIASES.get(frame, frame)
    try:
        return FRAMES[name]
    except KeyError:
        raise KeyError(f"unknown frame {frame!r}; expected one of {sorted(FRAMES)}") from None


def zw_degree(e: Sequence[int]) -> int:
    """Joint exponent of (z3, w2) along the constraint surface.

    Sending ``z3 = eps`` and ``w2 = z1 z2 eps / w1`` to zero scales the
    monomial by ``eps**zw_degree``.
    """
    num = e[3] - 2 * (e[0] + e[1] + e[2])
    if num % 6:
        raise NonLatticeImage(f"{tuple(e)} is not a monomial in z_i, w_a")
    return num // 6


def _zw_presentation(e: Sequence[int]) -> FrameExps:
    # Unique choice: the smallest z3 exponent that makes z1, z2 non-negative.
    a1, a2, b, c2 = e
    m = zw_degree(e)
    s = max(0, -a1, -a2)
    u = m - s
    return (a1 + s, a2 + s, s, b + u, u)


def zw_presentation_is_nonnegative(e: Sequence[int]) -> bool:
    return all(x >= 0 for x in _zw_presentation(e))


# -- conversion of framed data ------------------------------------------------

def frame_terms(x: TruncatedSeries, frame: Union[str, VariableFrame]) -> Dict[FrameExps, object]:
    """Render a canonical series as ``{frame exponents: coefficient}``."""
    f = get_frame(frame)
    return {f.from_canonical(e): c for e, c in x.terms.items()}


def from_frame_terms(terms: Mapping[FrameExps, object], frame: Union[str, VariableFrame],
                     order2: Optional[int] = None) -> TruncatedSeries:
    f = get_frame(frame)
    return TruncatedSeries({f.to_canonical(k): c for k, c in terms.items()}, order2)


def frame_convert(x, src: Union[str, VariableFrame], dst: Union[str, VariableFrame]):
    """Map framed exponent data from ``src`` to ``dst``.

    ``x`` may be a ``{frame exponents: coeff}`` dict, a single exponent tuple,
    or a ``(numerator_terms, denominator_list)`` pair describing an Euler
    expression.  Coefficients are untouched.
    """
    s, d = get_frame(src), get_frame(dst)

    def conv(k):
        return d.from_canonical(s.to_canonical(k))

    if isinstance(x, Mapping):
        out: Dict = {}
        for k, c in x.items():
            k2 = conv(k)
            out[k2] = out.get(k2, 0) + c
        return {k: c for k, c in out.items() if c}
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], Mapping):
        num, dens = x
        return frame_convert(num, s, d), [conv(m) for m in dens]
    return conv(tuple(x))


def euler_in_frame(numerator: Mapping[Union[FrameExps, Tuple], object],
                   denominators: Iterable, frame: Union[str, VariableFrame]) -> EulerExpr:
    """Build an Euler expression from numerator/denominator data written in ``frame``.

    Keys and denominator entries are either frame exponent tuples or
    ``{variable: exponent}`` dicts.
    """
    f = get_frame(frame)

    def canon(k):
        if isinstance(k, frozenset):
            k = dict(k)
        return f.to_canonical(k)

    return EulerExpr(TruncatedSeries({canon(k): c for k, c in numerator.items()}),
                     [canon(m) for m in denominators])


def fm(**exps) -> frozenset:
    """Hashable ``{variable: exponent}`` key for :func:`euler_in_frame`."""
    return frozenset(exps.items())


# -- specialization ------------------------------------------------------------

def _substitution(gen: ExponentVector, target: ExponentVector):
    """Linear map on the lattice that enforces ``monomial(gen) = monomial(target)``."""
    # Eliminate the last non-q coordinate with unit coefficient, else the q one.
    pivot = None
    for j in (2, 1, 0):
        if abs(gen[j]) == 1:
            pivot = j
            break
    if pivot is None:
        nz = [j for j in range(4) if gen[j] != 0]
        if not nz:
            raise SeriesError("cannot specialize the unit monomial")
        pivot = nz[-1]
    g = gen[pivot]
    diff = [target[i] - gen[i] for i in range(4)]

    def apply(e):
        k = Fraction(e[pivot], g)
        out = [e[i] + k * diff[i] for i in range(4)]
        if any(Fraction(v).denominator != 1 for v in out):
            raise NonLatticeImage(f"specialization sends {tuple(e)} off the lattice")
        return ExponentVector(*(int(v) for v in out))

    return apply


def _compose(maps):
    def apply(e):
        for m in maps:
            e = m(e)
        return e
    return apply


def _assignment_maps(assignments, frame: VariableFrame):
    items = assignments.items() if isinstance(assignments, Mapping) else assignments
    maps = []
    for var, value in items:
        gen = frame.generator(var)
        if value == 1:
            target = ExponentVector(0, 0, 0, 0)
        elif isinstance(value, Mapping):
            target = frame.to_canonical(value)
        else:
            target = ExponentVector(*value)
        maps.append(_substitution(gen, target))
    return _compose(maps)


def specialize(x, assignments, frame: Union[str, VariableFrame] = "y"):
    """Substitute frame variables by 1 or by monomials and re-collect.

    ``assignments`` maps variable names of ``frame`` (derived ones such as
    ``y3`` included) to ``1``, a ``{variable: exponent}`` dict in the same
    frame, or a canonical exponent vector.  Assignments apply in order.
    """
    f = get_frame(frame)
    phi = _assignment_maps(assignments, f)
    if isinstance(x, EulerExpr):
        dens = []
        for m in x.denominators:
            m2 = phi(m)
            if m2 == (0, 0, 0, 0):
                raise PoleAtSpecialization(f"denominator factor 1 - {tuple(m)} becomes 1 - 1")
            dens.append(m2)
        return EulerExpr(x.numerator.map_exponents(phi, None), dens)
    if isinstance(x, TruncatedSeries):
        if x.order2 is not None and any(phi(e)[3] != e[3] for e in x.terms):
            raise SeriesError("specialization changes the q-grading of a truncated series; "
                              "specialize the Euler expression instead")
        return x.map_exponents(phi)
    raise TypeError(f"cannot specialize {type(x).__name__}")


SCHUR_Y = {"y": 1, "y3": 1}
SCHUR_T = (("t2", 1), ("r", {"q": Fraction(1, 2)}))


def schur_limit(x):
    """The specialization ``y = 1, y3 = 1`` (so ``y1 y2 = 1``)."""
    return specialize(x, SCHUR_Y, "y")


# -- minimal reduction ------------------------------------------------------

def limit_zero(e: EulerExpr, variables: Iterable[str] = ("z3", "w2")) -> EulerExpr:
    """Limit ``z3, w2 -> 0`` of a zw-frame expression.

    Because ``z1 z2 z3 = w1 w2``, the two variables go to zero together; each
    monomial scales as ``eps**zw_degree``.  Numerator terms of positive degree
    vanish, denominator factors of positive degree become 1, negative degree
    diverges.
    """
    if set(variables) != {"z3", "w2"}:
        raise ValueError("only the joint limit z3, w2 -> 0 is well defined on the constraint surface")
    num = {}
    for m, c in e.numerator.terms.items():
        d = zw_degree(m)
        if d < 0:
            raise DivergentLimit(f"numerator monomial {tuple(m)} has negative (z3, w2) degree")
        if d == 0:
            num[m] = c
    dens = []
    for m in e.denominators:
        d = zw_degree(m)
        if d < 0:
            raise DivergentLimit(f"denominator monomial {tuple(m)} has negative (z3, w2) degree")
        if d == 0:
            dens.append(m)
    return EulerExpr(TruncatedSeries(num), dens)
