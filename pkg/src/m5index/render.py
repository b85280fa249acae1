"""Deterministic text and JSON renderings of series and Euler expressions."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence, Union

from .frames import VariableFrame, get_frame
from .series import EulerExpr, ExponentVector, TruncatedSeries

JSON_FORMAT_VERSION = 1


def _exp_str(e) -> str:
    e = Fraction(e)
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e})"


def _y_symmetric(a1: int, a2: int):
    # re-introduce y3 for display: y1^a1 y2^a2 = y1^(a1+s) y2^(a2+s) y3^s
    best = None
    for s in sorted({0, -a1, -a2}, key=abs):
        cost = abs(a1 + s) + abs(a2 + s) + abs(s)
        if best is None or cost < best[0]:
            best = (cost, s)
    s = best[1]
    return a1 + s, a2 + s, s


def render_monomial(e: Sequence[int], frame: Union[str, VariableFrame] = "y") -> str:
    f = get_frame(frame)
    exps = list(f.from_canonical(e))
    names = list(f.variables)
    if "y3" in f.derived:
        a1, a2, s = _y_symmetric(exps[0], exps[1])
        exps = [a1, a2, s] + exps[2:]
        names = ["y1", "y2", "y3"] + names[2:]
    parts = []
    for name, x in zip(names, exps):
        if x == 0:
            continue
        parts.append(name if x == 1 else f"{name}^{_exp_str(x)}")
    return "*".join(parts) if parts else "1"


def _coeff_str(c) -> str:
    return str(c)


def render_series(s: TruncatedSeries, frame: Union[str, VariableFrame] = "y",
                  show_order: bool = True) -> str:
    """Compact, space-free rendering, terms sorted by (q, fugacities)."""
    out = []
    for e, c in s.sorted_terms():
        m = render_monomial(e, frame)
        if m == "1":
            body = _coeff_str(abs(c))
        elif abs(c) == 1:
            body = m
        else:
            body = f"{_coeff_str(abs(c))}*{m}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    if not out:
        text = "0"
    else:
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += sign + body
    if show_order and s.order2 is not None:
        text += f"+O(q^{_exp_str(Fraction(s.order2, 2))})"
    return text


def render_euler(e: EulerExpr, frame: Union[str, VariableFrame] = "y") -> str:
    num = render_series(e.numerator, frame, show_order=False)
    if not e.denominators:
        return num
    dens = "".join(f"(1-{render_monomial(m, frame)})" for m in e.denominators)
    return f"({num})/({dens})"


# -- canonical JSON ------------------------------------------------------------

def series_to_json_obj(s: TruncatedSeries, frame: str = "y") -> dict:
    terms = []
    for e, c in s.sorted_terms():
        fr = Fraction(c)
        terms.append({"exp": list(e), "num": str(fr.numerator), "den": str(fr.denominator)})
    return {"frame": get_frame(frame).name, "q_order_times_2": s.order2, "terms": terms}


def series_to_json(s: TruncatedSeries, frame: str = "y") -> str:
    return json.dumps(series_to_json_obj(s, frame), indent=1, sort_keys=True)


def series_from_json_obj(obj: dict) -> TruncatedSeries:
    terms = {}
    for t in obj["terms"]:
        e = ExponentVector(*(int(x) for x in t["exp"]))
        terms[e] = Fraction(int(t["num"]), int(t["den"]))
    order2: Optional[int] = obj.get("q_order_times_2")
    return TruncatedSeries(terms, None if order2 is None else int(order2))


def series_from_json(text: str) -> TruncatedSeries:
    return series_from_json_obj(json.loads(text))
