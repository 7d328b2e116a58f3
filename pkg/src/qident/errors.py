"""Exception types shared across the package.

Every failure mode that callers are expected to handle gets its own class so
that the verifier and the CLI can map outcomes to verdicts and exit codes
without string matching.
"""

from __future__ import annotations


class QidentError(Exception):
    """Base class for all package-specific errors."""


class ZeroToNegativePower(QidentError):
    """Raised when 0 is raised to a negative integer power."""


class PoleEncountered(QidentError):
    """A denominator factor vanished during evaluation.

    The message names the offending factor so reports can show which
    parameter combination hit the pole.
    """


class NoConvergence(QidentError):
    """An infinite sum or product failed to meet its tail-bound target."""


class DegenerateVariables(QidentError):
    """Summation variables collide (x_i == x_j), so ratios of alternants are undefined."""


class SamplingExhausted(QidentError):
    """The random sampler could not find an admissible point within its retry budget."""


class MissingParameter(QidentError):
    """A required symbol has no value and no constraint determines it."""


class ZeroParameter(QidentError):
    """A constraint tried to solve for a symbol whose coefficient or value is zero."""


class UnknownIdentity(QidentError):
    """Catalog lookup failed: no record with the requested id."""


class MappingUndefined(QidentError):
    """A reduction link's parameter mapping does not cover the target's symbols."""


class InvalidDims(QidentError):
    """A requested dimension signature is outside the record's or engine's range."""
