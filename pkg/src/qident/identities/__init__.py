"""Catalog of transformation and summation records.

Importing this package registers every record; family modules are imported
purely for that side effect.
"""

from .core import (
    TERMINATING,
    DimsSignature,
    IdentityRecord,
    Nonterminating,
    ReductionLink,
    Side,
    Terminating,
    VectorSpec,
    build_side,
    catalog,
    catalog_json,
    describe_termination,
    eval_built_side,
    eval_side,
    lookup,
    record_summary,
)

from .compositions import (
    CompositionPlan,
    composition_plans,
    lookup_composition,
)

from . import duality  # noqa: E402,F401
from . import summations  # noqa: E402,F401
from . import sears  # noqa: E402,F401
from . import wellpoised  # noqa: E402,F401
from . import watson  # noqa: E402,F401
from . import samerank  # noqa: E402,F401

__all__ = [
    "TERMINATING",
    "CompositionPlan",
    "composition_plans",
    "lookup_composition",
    "DimsSignature",
    "IdentityRecord",
    "Nonterminating",
    "ReductionLink",
    "Side",
    "Terminating",
    "VectorSpec",
    "build_side",
    "catalog",
    "catalog_json",
    "describe_termination",
    "eval_built_side",
    "eval_side",
    "lookup",
    "record_summary",
]
