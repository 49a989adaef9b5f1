"""Exact q-series engine for quiver linking/unlinking identities."""

from .qcoef import (
    ONE,
    ZERO,
    QHalfRational,
    gaussian_binomial,
    laurent_expand,
    neg_s_power,
    poch,
    qsum,
    s_power,
)
from .quiver import (
    Arrow,
    DimVector,
    InvalidDimVectorError,
    PointerError,
    Quiver,
    TwoCyclePointer,
    VertexPairPointer,
    adjacency_matrix,
    euler_form,
    format_dim,
    is_symmetric,
    moduli_dim,
)
from .series import (
    CoverageError,
    IncomparableSeriesError,
    MotivicSeries,
    TruncationPolicy,
    Verdict,
    check_lemma21,
    coefficient_A,
    coefficient_P_EKL,
    series_A,
    series_eq,
    series_P_EKL,
    substitute_vertex,
)
from .mutations import MutationResult, add_twocycle, dim_map_u, fibre_u, link, unlink
from .strata import (
    StratumIndex,
    check_unlinking_identity,
    ideal_filtration_series,
    stratum_codim,
    stratum_series,
    unlink_policy,
    unlinking_sides,
)
from .framed import (
    FramedIndex,
    check_complex_euler,
    check_framed_decomposition,
    check_grass_acyclicity,
    check_linking_identity,
    check_linking_via_framed,
    framed_T_series,
    framed_TU_series,
    grass_series,
    link_policy,
    linking_sides,
)
from .quiverfile import QuiverDocument, QuiverParseError, parse_quiver, serialize_quiver

__version__ = "0.1.0"
