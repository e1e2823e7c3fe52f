"""Workbench for origin-anchored colorings of the quadrant.

A coloring system constrains the colors of horizontally and vertically
adjacent unit tiles of the first quadrant and pins the corner color.
This package checks finite colorings, searches for maximal ones,
certifies infinite ones with periodic witnesses, and runs censuses over
every system at a fixed color count.
"""

from .census import (
    CensusRecord,
    CensusSummary,
    MuEstimate,
    census_records,
    enumerate_systems,
    mu,
    parse_record_line,
    record_line,
    run_census,
    summarize_records,
    summary_to_json,
    system_at,
    system_index,
    total_systems,
)
from .checker import Violation, check_sequence, check_triangle, is_prefix
from .diagonal import diagonal_of, tile_at, tile_index, triangular
from .fileio import (
    FileFormatError,
    load_coloring,
    load_sequence,
    load_system,
    load_triangle,
    load_witness,
    parse_system,
    parse_verdict,
    save_sequence,
    save_system,
    save_triangle,
    save_witness,
    system_to_json,
    triangle_to_json,
    verdict_to_json,
    witness_to_json,
)
from .render import Palette, default_palette, parse_text_triangle, render_triangle
from .search import (
    BudgetExhausted,
    Enumeration,
    ExactMax,
    Indeterminate,
    LengthProfile,
    ReachedCap,
    SearchBudget,
    Unreachable,
    build_chain,
    classify,
    enumerate_sequences,
    extendable_colors,
    find_periodic_witness,
    length_profile,
    max_accept_length,
)
from .systems import (
    Bounded,
    ColoringSystem,
    HasColoring,
    InputError,
    PeriodicWitness,
    TriangleColoring,
    Unknown,
    Verdict,
    apply_bijection,
    canonical_form,
    canonical_id,
    canonicalize,
    full_triangle_depth,
    is_isomorphic,
    require_valid,
    validate_system,
    verdict_kind,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "Bounded",
    "CensusRecord",
    "CensusSummary",
    "ColoringSystem",
    "Enumeration",
    "ExactMax",
    "FileFormatError",
    "HasColoring",
    "Indeterminate",
    "InputError",
    "LengthProfile",
    "MuEstimate",
    "Palette",
    "PeriodicWitness",
    "ReachedCap",
    "SearchBudget",
    "TriangleColoring",
    "Unknown",
    "Unreachable",
    "Verdict",
    "Violation",
    "apply_bijection",
    "build_chain",
    "canonical_form",
    "canonical_id",
    "canonicalize",
    "census_records",
    "check_sequence",
    "check_triangle",
    "classify",
    "default_palette",
    "diagonal_of",
    "enumerate_sequences",
    "enumerate_systems",
    "extendable_colors",
    "find_periodic_witness",
    "full_triangle_depth",
    "is_isomorphic",
    "is_prefix",
    "length_profile",
    "load_coloring",
    "load_sequence",
    "load_system",
    "load_triangle",
    "load_witness",
    "max_accept_length",
    "mu",
    "parse_record_line",
    "parse_system",
    "parse_text_triangle",
    "parse_verdict",
    "record_line",
    "render_triangle",
    "require_valid",
    "run_census",
    "save_sequence",
    "save_system",
    "save_triangle",
    "save_witness",
    "summarize_records",
    "summary_to_json",
    "system_at",
    "system_index",
    "system_to_json",
    "tile_at",
    "tile_index",
    "total_systems",
    "triangular",
    "triangle_to_json",
    "validate_system",
    "verdict_kind",
    "verdict_to_json",
    "witness_to_json",
]
