"""Heights, resultants and Green functions of rational maps over Q."""

from ._core import (
    DEFAULT_ITERATIONS,
    InvalidInput,
    Map,
    Refused,
    UnsupportedDegree,
    bad_places,
    canonical_height,
    census_csv,
    green_pairing,
    h_res,
    milnor,
    minimal_resultant,
    orbit,
    preperiodic_points,
    weil_height,
)

__all__ = [
    "DEFAULT_ITERATIONS",
    "InvalidInput",
    "Map",
    "Refused",
    "UnsupportedDegree",
    "bad_places",
    "canonical_height",
    "census_csv",
    "green_pairing",
    "h_res",
    "milnor",
    "minimal_resultant",
    "orbit",
    "preperiodic_points",
    "weil_height",
]
