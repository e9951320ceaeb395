"""Monomial valuations and the normalized-volume upper bound.

For a strictly positive weight w on the ambient variables, the monomial
valuation of a germ f is v_w(f) = min over the support of the dot product
w.a.  Whenever w_sum - v_w(f) > 0, the weighted blow-up along w certifies

    vol(x, X)  <=  (w_sum - v_w(f))^n * v_w(f) / w_prod

for the n-dimensional hypersurface germ f = 0.  Both operations run in an
exact flavor (Fraction / SurdValue weights, exact results) and a numeric
flavor (float weights, float results); the flavor follows the entry types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, InputError, InvalidWeightError
from .support import ExponentVector, PolySupport
from .surd import SurdValue, exact_sign

WeightEntry = Union[Fraction, SurdValue, float]
WeightLike = Union["WeightVector", Sequence]


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive weights, one per ambient variable.

    Entries are Fractions or SurdValues (exact flavor) or floats (numeric
    flavor).  Ints coerce to Fractions; a single float entry makes the
    whole vector numeric.
    """

    entries: tuple[WeightEntry, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise InputError("empty weight vector")
        for w in self.entries:
            if isinstance(w, float):
                if not w > 0:
                    raise InputError(f"weights must be strictly positive, got {w}")
            elif exact_sign(w) <= 0:
                raise InputError(f"weights must be strictly positive, got {w}")

    @classmethod
    def of(cls, entries: WeightLike) -> WeightVector:
        if isinstance(entries, WeightVector):
            return entries
        fixed = []
        for w in entries:
            if isinstance(w, int):
                fixed.append(Fraction(w))
            elif isinstance(w, (Fraction, SurdValue, float)):
                fixed.append(w)
            else:
                raise InputError(f"unsupported weight entry {w!r}")
        return cls(tuple(fixed))

    @classmethod
    def parse(cls, text: str) -> WeightVector:
        """Comma-separated entries: rationals ("3/2") stay exact, decimals go numeric."""
        entries: list[WeightEntry] = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                raise InputError(f"empty weight entry in {text!r}")
            try:
                if "." in part or "e" in part.lower():
                    entries.append(float(part))
                else:
                    entries.append(Fraction(part))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad weight entry {part!r}") from exc
        return cls.of(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> WeightEntry:
        return self.entries[i]

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(w, float) for w in self.entries)

    @property
    def total(self):
        total = self.entries[0]
        for w in self.entries[1:]:
            total = total + w
        return total

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(w) for w in self.entries)


@dataclass(frozen=True)
class ValuationResult:
    """Value of v_w(f) together with every exponent attaining it."""

    value: WeightEntry
    active: tuple[ExponentVector, ...]


@dataclass(frozen=True)
class BoundEvaluation:
    """Full record of one evaluation of the volume bound at a weight.

    ld_factor = w_sum - v is the log-discrepancy estimate of the divisor
    extracted by the w-weighted blow-up; the bound is
    ld_factor**n * v / w_prod.
    """

    v: WeightEntry
    w_sum: WeightEntry
    w_prod: WeightEntry
    ld_factor: WeightEntry
    bound: WeightEntry
    active: tuple[ExponentVector, ...]


def _dot(w: Sequence[WeightEntry], exp: ExponentVector):
    total = None
    for wi, e in zip(w, exp):
        if e:
            term = wi * e
            total = term if total is None else total + term
    if total is None:  # the zero exponent; excluded by support invariants
        return 0 * w[0]
    return total


def monomial_valuation(f: PolySupport, w: WeightLike) -> ValuationResult:
    """min over the support of w.a, with all attaining exponents reported."""
    w = WeightVector.of(w)
    if len(w) != f.nvars:
        raise DimensionMismatchError(
            f"weight has {len(w)} entries but support has {f.nvars} variables"
        )
    entries = w.entries
    dots = [(_dot(entries, exp), exp) for exp in f.exponents]
    vmin = dots[0][0]
    for d, _ in dots[1:]:
        if d < vmin:
            vmin = d
    active = tuple(exp for d, exp in dots if d == vmin)
    return ValuationResult(vmin, active)


def nv_bound(f: PolySupport, w: WeightLike, n: int | None = None) -> BoundEvaluation:
    """Evaluate the normalized-volume upper bound at one weight.

    n defaults to nvars - 1 (a hypersurface germ in affine (n+1)-space).
    Weights with w_sum <= v_w(f) certify nothing and are rejected.
    """
    w = WeightVector.of(w)
    if n is None:
        n = f.nvars - 1
    if n < 1:
        raise InputError(f"dimension must be at least 1, got {n}")
    val = monomial_valuation(f, w)
    w_sum = w.total
    ld = w_sum - val.value
    positive = ld > 0 if isinstance(ld, float) else exact_sign(ld) > 0
    if not positive:
        raise InvalidWeightError(
            f"w_sum = {w_sum} <= v_w(f) = {val.value}: no valid log-discrepancy estimate"
        )
    w_prod = w.entries[0]
    for wi in w.entries[1:]:
        w_prod = w_prod * wi
    bound = ld**n * val.value / w_prod
    return BoundEvaluation(val.value, w_sum, w_prod, ld, bound, val.active)
