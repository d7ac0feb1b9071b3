"""Gröbner-Shirshov bases for free commutative differential algebras and
free Gelfand-Dorfman-Novikov algebras."""

from .algebra import (
    Alphabet,
    DVar,
    Monomial,
    Polynomial,
    circle,
    derive,
    leading,
    leading_of_derived,
    mono_compare,
    mono_stats,
)
from .errors import (
    GdnError,
    NotHomogeneousError,
    ParseError,
    ResourceCapExceeded,
    SemanticError,
    WeightError,
)
from .groebner import (
    RelationSet,
    SWord,
    buchberger_capped,
    complete_homogeneous,
    composition,
    decide_capped,
    decide_diff,
    find_reduction,
    irr_enumerate,
    member_diff,
    minimalize,
    normal_form,
    stage_step,
    verify_certificate,
)
from .novikov import (
    Circ,
    Gen,
    Tableau,
    check_gsb_gdn,
    check_identities,
    critical_multiples,
    embed,
    member_gdn,
    nf_gdn,
    span_oracle,
    tableau_enumerate,
    tableau_leading,
    tableau_to_poly,
)
from .parse import load_session, parse_expr, parse_poly, parse_session

__version__ = "0.1.0"
