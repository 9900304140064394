"""Power-series lower bounds certifying that word patterns are avoidable."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AvoidabilityError,
    BadCountSeries,
    BadSymbol,
    BoundViolation,
    BudgetExceeded,
    EmptyPattern,
    InvalidArgument,
    InvalidTarget,
    NotApplicable,
    NotInvertible,
    OutOfRange,
)
from .pattern import (  # noqa: E402
    FactorSpan,
    ParikhVector,
    Pattern,
    balanced_factor,
    factor_pattern,
    is_doubled,
    min_occurrence,
    parikh_prefixes,
    parikh_vector,
    parse_pattern,
    render,
    zimin,
)
from .series import (  # noqa: E402
    ClosedForm,
    GrowthCheck,
    TruncatedSeries,
    empirical_growth,
    first_negative,
    golod_series,
    instance_gf,
    lemma5_closed_form,
    pattern_golod_series,
    ratio_check,
    series_add,
    series_mul,
    series_reciprocal,
)
from .oracle import (  # noqa: E402
    Assignment,
    CountTable,
    contains_instance,
    count_avoiders,
    count_instances,
    extension_safe,
    is_instance,
)
from .certifier import Certificate, ComparisonRow, analyze, certify, compare  # noqa: E402
