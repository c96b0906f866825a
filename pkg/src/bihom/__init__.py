"""Exact BiHom-algebra and BiHom-Akivis algebra toolkit."""
from .errors import *  # noqa: F401,F403
from .linear import (
    LinearMap,
    MultilinearMap,
    Rational,
    Vector,
    lm_commute,
    lm_compose,
    lm_invert,
    ml_eval,
)
from .structures import (
    AkivisAlgebra,
    BiHomAkivisAlgebra,
    BiHomAlgebra,
    akivis_to_bihom,
    associated_akivis,
    bihom_associator,
    bihom_commutator,
    bihom_jacobiator,
    bruck_kleinfeld,
    commutator_algebra,
    twist_bihom_akivis,
    validate_bihom,
    yau_twist,
)
from .identities import (
    REGISTRY,
    CheckReport,
    Classification,
    audit,
    audit_rules,
    check,
    check_alternating,
    check_morphism,
    classify,
    residual,
)

__version__ = "0.1.0"
