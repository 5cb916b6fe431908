"""Numerical and affine semigroups: gluings, Frobenius numbers, Wilf audits."""

from .errors import (
    ArithmeticOverflow,
    BoundTooSmall,
    DimensionMismatch,
    EmptyInput,
    GenusBoundExceeded,
    ModeMismatch,
    NonCoprime,
    NotMinimal,
    SemigroupError,
    UnsupportedOrder,
    ZeroGenerator,
)
from .numerical import (
    NumericalSemigroup,
    WilfReport,
    construct,
    contains,
    minimize_generators,
    parse_generators,
    semigroup,
    wilf_report,
)
from .gluing import (
    GluingAudit,
    GluingSpec,
    audit_gluing,
    enumerate_gluings,
    frobenius_by_formula,
    glue,
    validate_gluing,
)
from .orders import MonomialOrder, count_below
from .affine import (
    AffineSemigroup,
    build_affine,
    cone_contains,
    lattice_contains,
    member,
    rank_gluability_check,
)
from .gaps import GapAnalysis, gap_analysis
from .affine_gluing import (
    AffineGluingAudit,
    RayGluingSpec,
    audit_affine_gluing,
    audit_triple,
    build_glued_affine,
    validate_ray_gluing,
)
from .harness import CampaignConfig, CampaignReport, enumerate_by_genus, run_campaign

__version__ = "0.1.0"
