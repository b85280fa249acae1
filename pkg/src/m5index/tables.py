"""Character-basis tables: q-coefficients written as sums of ``chi_[a,b](y_i)`` times powers.

In the y-frame a table entry is keyed by ``(2 * q-exponent, y-exponent, (a, b))``;
in the x-frame (``x = q y``) by ``(2 * q-exponent, x-exponent, (a, b))`` with the
q-exponent read in the x-frame.  Rational functions of ``x`` of the form
``polynomial / prod (1 - x^k)`` are compared through their power series.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .characters import char_sl3, sl3_decompose
from .series import ExponentVector, SeriesError, TruncatedSeries

Key = Tuple[int, int, Tuple[int, int]]


class MissingFixture(FileNotFoundError):
    pass


def _split(e, frame: str) -> Tuple[int, int]:
    if frame == "y":
        return e[3], e[2]
    if frame == "x":
        return e[3] - 2 * e[2], e[2]
    raise ValueError(f"character tables exist for the y and x frames, not {frame!r}")


def _join(q2: int, p: int, frame: str) -> Tuple[int, int]:
    # returns (b, c2)
    if frame == "y":
        return p, q2
    return p, q2 + 2 * p


def char_combination(s: TruncatedSeries, frame: str = "y") -> Dict[Key, object]:
    """Decompose every (q, power) slice of ``s`` into sl(3) characters."""
    slices: Dict[Tuple[int, int], Dict[Tuple[int, int], object]] = {}
    for e, c in s.terms.items():
        slices.setdefault(_split(e, frame), {})[(e[0], e[1])] = c
    out: Dict[Key, object] = {}
    for (q2, p), poly in slices.items():
        for ab, m in sl3_decompose(poly).items():
            out[(q2, p, ab)] = m
    return out


def from_char_combination(table: Mapping[Key, object], frame: str = "y") -> TruncatedSeries:
    total: Dict[ExponentVector, object] = {}
    for (q2, p, (a, b)), m in table.items():
        bb, c2 = _join(q2, p, frame)
        for e, c in char_sl3(a, b).terms.items():
            k = ExponentVector(e[0], e[1], bb, c2)
            total[k] = total.get(k, 0) + m * c
    return TruncatedSeries(total)


def _chi(ab: Tuple[int, int]) -> str:
    return "" if ab == (0, 0) else f"chi[{ab[0]},{ab[1]}]"


def _power(var: str, p: int) -> str:
    if p == 0:
        return ""
    return var if p == 1 else f"{var}^{p}"


def render_level(entries: Mapping[Tuple[int, Tuple[int, int]], object], var: str = "y") -> str:
    """Render ``{(power, (a, b)): coeff}`` as a compact character combination."""
    parts = []
    for (p, ab), c in sorted(entries.items(), key=lambda t: (t[0][0], t[0][1])):
        if c == 0:
            continue
        body = "*".join(x for x in (_chi(ab), _power(var, p)) if x)
        if not body:
            body, mag = str(abs(c)), None
        else:
            mag = abs(c)
        if mag is not None and mag != 1:
            body = f"{mag}*{body}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += sign + body
    return text


def levels_of(table: Mapping[Key, object]) -> Dict[int, Dict[Tuple[int, Tuple[int, int]], object]]:
    out: Dict[int, Dict] = {}
    for (q2, p, ab), c in table.items():
        out.setdefault(q2, {})[(p, ab)] = c
    return out


# -- rational functions of x ---------------------------------------------------

@dataclass(frozen=True)
class XRational:
    """``sum_j num[j] x^j / prod_k (1 - x^k)``."""

    num: Tuple[Tuple[int, object], ...]
    den: Tuple[int, ...] = ()

    @classmethod
    def make(cls, num: Mapping[int, object], den: Iterable[int] = (),
             den_plus: Iterable[int] = ()) -> "XRational":
        """``den_plus`` lists factors ``1 + x^k``, rewritten as ``(1 - x^k) / (1 - x^2k)``."""
        poly = {int(j): c for j, c in num.items() if c}
        den = list(den)
        for k in den_plus:
            shifted = {j + k: -c for j, c in poly.items()}
            for j, c in shifted.items():
                poly[j] = poly.get(j, 0) + c
            den.append(2 * k)
        return cls(tuple(sorted((j, c) for j, c in poly.items() if c)), tuple(sorted(den)))

    @classmethod
    def from_json(cls, obj: Mapping) -> "XRational":
        return cls.make({int(j): Fraction(c) for j, c in obj["num"].items()},
                        obj.get("den", []), obj.get("den_plus", []))

    def series(self, degree: int) -> Dict[int, object]:
        """Power-series coefficients of ``x^j`` for ``j < degree``."""
        coeffs = [0] * degree
        for j, c in self.num:
            if j < 0:
                raise SeriesError("negative powers of x are not supported")
            if j < degree:
                coeffs[j] += c
        for k in self.den:
            if k <= 0:
                raise SeriesError("denominator factors must be 1 - x^k with k > 0")
            for j in range(k, degree):
                coeffs[j] += coeffs[j - k]
        return {j: c for j, c in enumerate(coeffs) if c}

    def render(self) -> str:
        n = render_level({(j, (0, 0)): c for j, c in self.num}, "x")
        if not self.den:
            return n
        d = "".join(f"(1-{_power('x', k)})" for k in self.den)
        return f"({n})/{d}"


def x_table_from_fixture(entries) -> Dict[Tuple[int, Tuple[int, int]], XRational]:
    out = {}
    for ent in entries:
        ab = tuple(ent["char"])
        out[(int(ent["q2"]), ab)] = XRational.from_json(ent)
    return out


# -- fixtures ------------------------------------------------------------------

FIXTURE_VERSION = "v1"


def fixture_dir(override: Optional[str] = None) -> Path:
    if override is not None:
        return Path(override)
    return Path(str(resources.files("m5index").joinpath("fixtures", FIXTURE_VERSION)))


def load_fixture(name: str, directory: Optional[str] = None) -> dict:
    path = fixture_dir(directory) / name
    if not path.is_file():
        raise MissingFixture(f"fixture {name!r} not found in {path.parent}")
    return json.loads(path.read_text())


def y_table_from_fixture(entries) -> Dict[Key, Fraction]:
    """Fixture rows ``{"q2", "y", "char", "coeff"}`` to a table."""
    return {(int(r["q2"]), int(r["y"]), tuple(r["char"])): Fraction(r["coeff"]) for r in entries}


__all__ = [
    "MissingFixture", "XRational", "char_combination", "from_char_combination", "render_level",
    "levels_of", "x_table_from_fixture", "y_table_from_fixture", "fixture_dir", "load_fixture",
    "FIXTURE_VERSION",
]
