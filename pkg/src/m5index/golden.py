"""Golden expansions stored as canonical series JSON.

Each entry names a recipe; ``write_golden`` regenerates the files and
``check_golden`` compares stored and recomputed series exactly.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from . import formulas as F
from .render import series_from_json_obj, series_to_json
from .series import TruncatedSeries, euler_expand
from .tables import MissingFixture, fixture_dir

GOLDEN_SUBDIR = "golden"

RECIPES: Dict[str, Tuple[str, Callable[[], TruncatedSeries]]] = {
    "chi_A1_q4": ("y", lambda: F.index_chi(F.TheorySpec(2, True), 4)),
    "chi_gl2_q3": ("y", lambda: F.index_chi(F.TheorySpec(2), 3)),
    "chi_gl1_t_q3": ("t", lambda: F.index_chi(F.TheorySpec(1), 3)),
    "chi_gl3_q4": ("y", lambda: F.index_chi(F.TheorySpec(3), 4)),
    "chi_sugra_q4": ("y", lambda: F.index_sugra(4)),
    "f_sugra_q4": ("y", lambda: euler_expand(F.sugra_single_particle(), 4)),
    "chi_minimal2_q5": ("zw", lambda: F.minimal_index(2, 5)),
}


def golden_dir(override: Optional[str] = None) -> Path:
    return fixture_dir(override) / GOLDEN_SUBDIR


def compute(name: str) -> TruncatedSeries:
    return RECIPES[name][1]()


def write_golden(directory: Optional[str] = None) -> List[Path]:
    out = golden_dir(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, (frame, recipe) in sorted(RECIPES.items()):
        p = out / f"{name}.json"
        p.write_text(series_to_json(recipe(), frame) + "\n")
        paths.append(p)
    return paths


def load_golden(name: str, directory: Optional[str] = None) -> TruncatedSeries:
    p = golden_dir(directory) / f"{name}.json"
    if not p.is_file():
        raise MissingFixture(f"golden file {p} not found")
    return series_from_json_obj(json.loads(p.read_text()))


def check_golden(directory: Optional[str] = None) -> List[Tuple[str, bool, TruncatedSeries, TruncatedSeries]]:
    """``(name, equal, stored, recomputed)`` for every recipe."""
    rows = []
    for name in sorted(RECIPES):
        stored = load_golden(name, directory)
        fresh = compute(name)
        rows.append((name, stored == fresh, stored, fresh))
    return rows


__all__ = ["RECIPES", "golden_dir", "compute", "write_golden", "load_golden", "check_golden"]
