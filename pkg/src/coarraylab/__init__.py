"""Difference-coarray workbench for sparse linear arrays on the integer grid."""

from .catalog import CatalogEntry, UnknownEntryError, get_entry, list_entries
from .core import (
    HOLE_FREE_TEXT,
    HOLES_TEXT,
    MAX_APERTURE,
    MAX_SENSORS,
    CoarrayAnalysis,
    ComparisonReport,
    NormalizedArray,
    ResourceLimitError,
    SensorArray,
    WeightFunction,
    analyze,
    compare,
    difference_coarray,
    difference_set,
    holes,
    indicator_autocorrelation,
    is_hole_free,
    normalize,
    primary_weights,
    weight_function,
)
from .parsing import (
    IesSpec,
    ParseError,
    format_ies,
    format_positions,
    ies_from_gaps,
    ies_to_positions,
    parse_array,
    parse_ies,
    parse_positions,
)
from .render import RenderOptions, render_stem_svg

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry",
    "CoarrayAnalysis",
    "ComparisonReport",
    "HOLES_TEXT",
    "HOLE_FREE_TEXT",
    "IesSpec",
    "MAX_APERTURE",
    "MAX_SENSORS",
    "NormalizedArray",
    "ParseError",
    "RenderOptions",
    "ResourceLimitError",
    "SensorArray",
    "UnknownEntryError",
    "WeightFunction",
    "analyze",
    "compare",
    "difference_coarray",
    "difference_set",
    "format_ies",
    "format_positions",
    "get_entry",
    "holes",
    "ies_from_gaps",
    "ies_to_positions",
    "indicator_autocorrelation",
    "is_hole_free",
    "list_entries",
    "normalize",
    "parse_array",
    "parse_ies",
    "parse_positions",
    "primary_weights",
    "render_stem_svg",
    "weight_function",
]
