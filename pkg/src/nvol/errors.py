"""Exception hierarchy shared across the toolkit.

Input-shaped problems (bad syntax, broken invariants, out-of-range
parameters) derive from ``InputError``; mathematically meaningful
failures (a weight that certifies nothing, a grid with no valid point,
a descriptor the tables cannot answer for) derive from
``ComputationError``.  The CLI maps the two branches to exit codes 2
and 1 respectively.
"""

from __future__ import annotations


class NvolError(Exception):
    """Base class for all toolkit errors."""


class InputError(NvolError, ValueError):
    """Invalid input: syntax, invariants, parameter ranges."""


class ParseError(InputError):
    """Syntax error in a polynomial expression, with a 0-based position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SupportError(InputError):
    """A polynomial support violating its invariants (empty, constant term, ...)."""


class DescriptorError(InputError):
    """A singularity descriptor with out-of-range or malformed parameters."""


class DimensionMismatchError(InputError):
    """Weight vector length does not match the support's variable count."""


class ComputationError(NvolError):
    """The inputs are well-formed but the requested value does not exist."""


class InvalidWeightError(ComputationError):
    """Weight with w_sum <= v_w(f): carries no log-discrepancy estimate."""


class NoValidWeightError(ComputationError):
    """Every grid point fails the w_sum > v_w(f) validity condition."""


class UnknownVolumeError(ComputationError):
    """No volume data for the given descriptor."""


class UnknownMldError(ComputationError):
    """No minimal log discrepancy data for the given descriptor."""


class UndecidableClassError(ComputationError):
    """Classification needs a cA-class that the toolkit does not compute."""
