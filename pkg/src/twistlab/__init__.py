"""Exact computation with fibre-surface monodromies given as Dehn-twist words.

The package models the homological (symplectic) shadow of a mapping
class: Alexander polynomials via the action on first homology,
twist-length obstruction certificates for fibred-knot monodromies, the
pair-of-pants Stallings family, and certified lower bounds on
stabilisation height driven by stable-commutator-length inequalities.
Everything is computed in exact integer/rational arithmetic.
"""

from .errors import ParseError, PreconditionError, VerificationError
from .homology import (
    AlexanderReport,
    Classification,
    HomologyClass,
    HomologyMatrix,
    Surface,
    TwistLetter,
    TwistWord,
    alexander_report,
    characteristic_polynomial,
    pair,
    standard_form,
    twist_action,
    word_action,
)
from .obstruction import (
    ObstructionCertificate,
    knot_monodromy_obstruction,
    knot_twist_length_lower_bound,
    orthogonal_complement,
    verify_certificate,
)
from .pants import (
    PANTS_SURFACE,
    ArcCut,
    CutReport,
    PantsClass,
    PantsFamilyMember,
    compose,
    cut_annulus_twists,
    hopf_deplumbing_obstructed,
    pants_alexander,
    pants_twist_length,
    pants_word,
    stallings_twist,
)
from .polynomials import IntegerPolynomial, polynomial_text
from .sclbound import (
    BoundKind,
    CBoundModel,
    Derivation,
    HeightQuery,
    HeightResult,
    ILLUSTRATIVE_MODEL,
    ModelFlag,
    RationalBound,
    Rule,
    chain_lower,
    height_chain_bound,
    height_lower_bound,
    height_model_bound,
    korkmaz_lower,
    lower,
    power_rule,
    product_rule,
    replay,
    verify_derivation,
)
from .wordparse import canonicalize_word, format_class, format_word, parse_class, parse_word

__all__ = [
    "AlexanderReport",
    "ArcCut",
    "BoundKind",
    "CBoundModel",
    "Classification",
    "CutReport",
    "Derivation",
    "HeightQuery",
    "HeightResult",
    "HomologyClass",
    "HomologyMatrix",
    "ILLUSTRATIVE_MODEL",
    "IntegerPolynomial",
    "ModelFlag",
    "ObstructionCertificate",
    "PANTS_SURFACE",
    "PantsClass",
    "PantsFamilyMember",
    "ParseError",
    "PreconditionError",
    "RationalBound",
    "Rule",
    "Surface",
    "TwistLetter",
    "TwistWord",
    "VerificationError",
    "alexander_report",
    "canonicalize_word",
    "chain_lower",
    "characteristic_polynomial",
    "compose",
    "cut_annulus_twists",
    "format_class",
    "format_word",
    "height_chain_bound",
    "height_lower_bound",
    "height_model_bound",
    "hopf_deplumbing_obstructed",
    "knot_monodromy_obstruction",
    "knot_twist_length_lower_bound",
    "korkmaz_lower",
    "lower",
    "orthogonal_complement",
    "pair",
    "pants_alexander",
    "pants_twist_length",
    "pants_word",
    "parse_class",
    "parse_word",
    "polynomial_text",
    "power_rule",
    "product_rule",
    "replay",
    "stallings_twist",
    "standard_form",
    "twist_action",
    "verify_certificate",
    "verify_derivation",
    "word_action",
]
