"""Refined (slice-weighted) Ehrhart series of lattice polytopes in exact arithmetic."""

from .closed_forms import (
    cross_ehrhart_count,
    cross_series,
    cube_series,
    cube_slice_product,
    macmahon_carlitz,
    simplex_series,
    square_series,
)
from .graded_quotient import exact_rank, quotient_hilbert, verify_regular_sequence
from .lattice import (
    LatticePolytope,
    dilation_contains,
    enumerate_points,
    from_halfspaces,
    make_family,
    refined_series_bruteforce,
    slice_polynomial,
    sliced_count,
)
from .permstats import descent_count, eulerian_polynomial, major_index, refined_eulerian
from .qpoly import (
    QLaurent,
    QTPoly,
    QTRational,
    QTSeries,
    q_binomial,
    q_integer,
    rational_equal,
    series_equal,
    series_expand,
)

__version__ = "0.1.0"
