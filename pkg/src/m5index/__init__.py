"""Exact symbolic expansions of 6d N=(2,0) superconformal indices."""
from .characters import char_sl2, char_sl3, dim_sl3, sl3_decompose
from .formulas import (
    InvalidWeight,
    TheorySpec,
    gk_zw_form,
    index_chi,
    index_sugra,
    minimal_index,
    minimal_index_product,
    single_particle_f1,
    single_particle_fN,
    single_particle_g,
    sugra_single_particle,
    x_graded_index,
)
from .frames import get_frame, schur_limit, specialize
from .jets import bundle_spec_for_weight, calibrate_conventions, jet_character
from .plethystic import ConstantTermError, adams, pexp, plog
from .render import render_euler, render_series, series_from_json, series_to_json
from .series import EulerExpr, ExponentVector, SeriesError, TruncatedSeries, euler_expand, laurent, mono

__version__ = "0.1.0"

__all__ = [
    "char_sl2", "char_sl3", "dim_sl3", "sl3_decompose",
    "InvalidWeight", "TheorySpec", "gk_zw_form", "index_chi", "index_sugra", "minimal_index",
    "minimal_index_product", "single_particle_f1", "single_particle_fN", "single_particle_g",
    "sugra_single_particle", "x_graded_index",
    "get_frame", "schur_limit", "specialize",
    "bundle_spec_for_weight", "calibrate_conventions", "jet_character",
    "ConstantTermError", "adams", "pexp", "plog",
    "render_euler", "render_series", "series_from_json", "series_to_json",
    "EulerExpr", "ExponentVector", "SeriesError", "TruncatedSeries", "euler_expand", "laurent", "mono",
]
