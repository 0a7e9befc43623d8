"""Self-dual codes over GF(p) from skew-type matrices attaining the Ehlich-Wojtas bound."""

from .exactmat import SignMatrix, det_exact, ew_bounds, feasibility, is_skew_ew, is_skew_type
from .gfcode import LinearCode, is_self_dual, min_distance_bounded, min_distance_enum

__version__ = "0.1.0"
