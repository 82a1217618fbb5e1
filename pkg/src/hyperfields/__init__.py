"""Finite Krasner hyperfields: construction, verification, classification,
serialization."""

from .core import (
    AXIOM_NAMES,
    AxiomReport,
    AxiomResult,
    ElementSet,
    Hyperfield,
    HyperfieldCandidate,
    hyper_sum,
    hyper_sum_sets,
    opposite,
    relabel,
    verified,
    verify,
)
from .construct import (
    SubgroupSpec,
    from_field,
    hyperfield_of_order,
    massouros,
    pair_hyperfield,
    product,
    product_candidate,
    quotient,
    subgroup_closure,
)
from .enumeration import (
    OneRowMap,
    SearchOptions,
    abelian_groups,
    enumerate_hyperfields,
    expand_one_row,
)
from .errors import (
    AxiomViolationError,
    BudgetExceededError,
    CapacityError,
    ConstructionError,
    DomainError,
    HyperfieldError,
    PreconditionError,
    StructuralError,
)
from .galois import Factorization, FieldTable, PrimePower, factor_integer, gf, verify_field
from .io_format import (
    DocumentError,
    HyperfieldDocument,
    ParseError,
    ValidationError,
    candidate_from_document,
    default_labels,
    parse_document,
    pretty_table,
    render_document,
    to_document,
)
from .iso import Fingerprint, IsoWitness, are_isomorphic, fingerprint, is_isomorphism

__version__ = "0.1.0"

__all__ = [
    "AXIOM_NAMES",
    "AxiomReport",
    "AxiomResult",
    "AxiomViolationError",
    "BudgetExceededError",
    "CapacityError",
    "ConstructionError",
    "DocumentError",
    "DomainError",
    "ElementSet",
    "Factorization",
    "FieldTable",
    "Fingerprint",
    "Hyperfield",
    "HyperfieldCandidate",
    "HyperfieldDocument",
    "HyperfieldError",
    "IsoWitness",
    "OneRowMap",
    "ParseError",
    "PreconditionError",
    "PrimePower",
    "SearchOptions",
    "StructuralError",
    "SubgroupSpec",
    "ValidationError",
    "abelian_groups",
    "are_isomorphic",
    "candidate_from_document",
    "default_labels",
    "enumerate_hyperfields",
    "expand_one_row",
    "factor_integer",
    "fingerprint",
    "from_field",
    "gf",
    "hyper_sum",
    "hyper_sum_sets",
    "hyperfield_of_order",
    "is_isomorphism",
    "massouros",
    "opposite",
    "pair_hyperfield",
    "parse_document",
    "pretty_table",
    "product",
    "product_candidate",
    "quotient",
    "relabel",
    "render_document",
    "subgroup_closure",
    "to_document",
    "verified",
    "verify",
    "verify_field",
]
