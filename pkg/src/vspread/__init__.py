"""Combinatorics of vector-spread (t-spread) monomial ideals."""

from .betti import BettiTable, DominanceReport, dominance_check, graded_betti, render_table
from .core import (
    Monomial,
    SpreadContext,
    binom,
    count_t_spread,
    enumerate_t_spread,
    format_monomial,
    is_t_spread,
    iter_t_spread,
    lex_compare,
    parse_monomial,
)
from .errors import (
    ClassificationError,
    ContractError,
    InfeasibleSizeError,
    InvalidMonomialError,
    MonomialParseError,
    NotStronglyStableError,
    OutOfRangeError,
    ShadowEmptyError,
    SpreadError,
    UnitIdealError,
    UnsupportedContextError,
)
from .ideals import (
    MonomialIdeal,
    ft_vector,
    graded_component_t,
    is_lex_ideal,
    is_strongly_stable_ideal,
    lex_ideal_from_sizes,
    lex_layers,
    lexify,
    minimalize,
    read_ideal,
)
from .macaulay import (
    BinomialExpansion,
    FTVector,
    FVectorReport,
    binomial_expansion,
    complement_size,
    lex_ideal_from_ft_vector,
    t_operator,
    validate_ft_vector,
)
from .sets import (
    MaxStats,
    MonomialSet,
    is_lex_set,
    is_strongly_stable_set,
    lex_segment,
    lex_set_of_size,
    max_stats,
    min_of_shadow,
    read_set,
    shadow_0,
    shadow_t,
    strongly_stable_closure,
)

__version__ = "0.1.0"
