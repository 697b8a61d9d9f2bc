"""Exact absolute-simplicity verdicts for Jacobians of hyperelliptic curves
over small finite fields, via irreducibility of the Weil polynomial and
degree stability of Frobenius powers."""

from .errors import (
    BadDegrees,
    CorruptRecord,
    FrobtorusError,
    InvariantViolation,
    NonIntegralCoefficient,
    NonPrime,
    ParseError,
    ResumeMismatch,
    Singular,
    SizeExceeded,
    WeilBoundViolated,
    ZeroPolynomial,
)
from .gf import (
    FieldElement,
    FieldSpec,
    element,
    enumerate_elements,
    field_create,
    gen,
    inv,
    one,
    scalar,
    zero,
)
from .intpoly import IntPoly, X, cyclotomic, factor, poly_gcd, resultant, resultant_y, squarefree_part
from .zeta import (
    RootModulusCheck,
    WeilPolynomial,
    is_ordinary,
    is_weil,
    power_sums,
    weil_from_counts,
    weil_from_json,
    weil_to_json,
)
from .curves import (
    HyperellipticCurve,
    PointCounts,
    count_points,
    counts_up_to_genus,
    curve_from_text,
    curve_to_text,
    genus_for_degree,
    validate_curve,
)
from .simplicity import (
    ABSOLUTELY_SIMPLE,
    INCONCLUSIVE,
    NOT_ABSOLUTELY_SIMPLE,
    NOT_SIMPLE,
    FrobeniusPowerReport,
    SimplicityVerdict,
    charpoly_power,
    classify,
    elliptic_torus_test,
    frobenius_power_report,
    minpoly_power,
    ratio_poly,
    ratio_torsion_orders,
    verdict_from_json,
    verdict_to_json,
    verify_verdict,
)
from .survey import (
    SurveyConfig,
    analyze_one,
    curve_record,
    enumerate_equations,
    report,
    run_find,
    run_survey,
)

__version__ = "0.1.0"

__all__ = [
    "ABSOLUTELY_SIMPLE",
    "BadDegrees",
    "CorruptRecord",
    "FieldElement",
    "FieldSpec",
    "FrobeniusPowerReport",
    "FrobtorusError",
    "HyperellipticCurve",
    "INCONCLUSIVE",
    "IntPoly",
    "InvariantViolation",
    "NOT_ABSOLUTELY_SIMPLE",
    "NOT_SIMPLE",
    "NonIntegralCoefficient",
    "NonPrime",
    "ParseError",
    "PointCounts",
    "ResumeMismatch",
    "RootModulusCheck",
    "SimplicityVerdict",
    "Singular",
    "SizeExceeded",
    "SurveyConfig",
    "WeilBoundViolated",
    "WeilPolynomial",
    "X",
    "ZeroPolynomial",
    "analyze_one",
    "charpoly_power",
    "classify",
    "count_points",
    "counts_up_to_genus",
    "curve_from_text",
    "curve_record",
    "curve_to_text",
    "cyclotomic",
    "element",
    "elliptic_torus_test",
    "enumerate_elements",
    "enumerate_equations",
    "factor",
    "field_create",
    "frobenius_power_report",
    "gen",
    "genus_for_degree",
    "inv",
    "is_ordinary",
    "is_weil",
    "minpoly_power",
    "one",
    "poly_gcd",
    "power_sums",
    "ratio_poly",
    "ratio_torsion_orders",
    "report",
    "resultant",
    "resultant_y",
    "run_find",
    "run_survey",
    "scalar",
    "squarefree_part",
    "validate_curve",
    "verdict_from_json",
    "verdict_to_json",
    "verify_verdict",
    "weil_from_counts",
    "weil_from_json",
    "weil_to_json",
    "zero",
]
