"""qident: exact and high-precision verification of q-series identities.

The package evaluates one-dimensional and multivariate basic hypergeometric
series — exactly over the rationals for terminating sums, or in decimal
arithmetic at a configurable precision for nonterminating ones — and checks
both sides of every cataloged transformation or summation formula at
randomized parameter points that satisfy the formula's balancing constraints.
"""

from __future__ import annotations

from .errors import QidentError, SamplingExhausted, UnknownIdentity
from .identities import catalog, composition_plans, lookup, lookup_composition
from .params import ParamSet
from .scalars import DEFAULT_DIGITS, Precision
from .verifier import (
    TrialDims,
    VerificationReport,
    run_suite,
    sample_params,
    suite_summary,
    verify,
    verify_composition,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DIGITS",
    "ParamSet",
    "Precision",
    "QidentError",
    "SamplingExhausted",
    "TrialDims",
    "UnknownIdentity",
    "VerificationReport",
    "catalog",
    "composition_plans",
    "lookup",
    "lookup_composition",
    "run_suite",
    "sample_params",
    "suite_summary",
    "verify",
    "verify_composition",
    "verify_reduction",
    "__version__",
]
