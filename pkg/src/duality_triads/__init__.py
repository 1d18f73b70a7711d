"""Exact duality-triad engines: connection-constant triangles, triad
polynomials, and the identity linking them."""

from duality_triads.catalog import (
    NAMES,
    CatalogEntry,
    RootSequence,
    abel_connection,
    builtin,
    closed_form,
    default_entries,
    euler_numbers,
    expand_roots,
    generalized_lah,
    lah_recurrence,
)
from duality_triads.core import (
    BandedMatrix,
    ConnectionTriangle,
    matrix_power,
    matrix_power_entry,
    row_sums,
    step_row,
    transition_matrix,
    triangle,
)
from duality_triads.duality import DualityReport, expand_in_basis, verify_triad
from duality_triads.errors import (
    DegenerateBasis,
    EnumerationBoundExceeded,
    IndexBeyondExplicitList,
    IndexOutOfTriangle,
    NoOracle,
    NoPolynomialSequence,
    SequenceParseError,
    TriadError,
    UnknownName,
)
from duality_triads.paths import count_paths, oracle_triangle
from duality_triads.polynomials import (
    Polynomial,
    eigen_residual,
    evaluate,
    mul_by_x,
    poly_combine,
    triad_polynomials,
)
from duality_triads.sequences import SequenceSpec, TriadSpec, eval_sequence, parse_sequence

__all__ = [name for name in dir() if not name.startswith("_")]
