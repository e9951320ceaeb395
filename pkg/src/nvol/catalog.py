"""Closed-form local volumes and mlds for named threefold singularities.

The tables carry every exactly-known local volume in the >= 9 range
(ordinary double point 16, the A/D/E hypersurface values, quotient values
27/|G|) plus interval data where only bounds are certified.  On top of the
lookups sit three decision procedures: the volume >= 9 classification, the
vol <= 9*mld comparison with its exact equality case, and degree transfer
along quasi-etale covers.

Descriptors are small frozen dataclasses; ``parse_descriptor`` accepts the
compact text forms used by the command line ("A3", "Dinf", "1/3(1,1,2)",
"cA2", "cubic(5)", "tA2", "quot(3,5)", "smooth").
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    DescriptorError,
    UndecidableClassError,
    UnknownMldError,
    UnknownVolumeError,
)
from .optimizer import OptimizerOptions, minimize_bound
from .support import PolySupport, parse_polynomial
from .surd import SurdValue

INFINITY = math.inf

ExactValue = Union[Fraction, SurdValue]


def _is_index(k, minimum: int, allow_infinite: bool = False) -> bool:
    if allow_infinite and k == INFINITY:
        return True
    return isinstance(k, int) and k >= minimum


@dataclass(frozen=True)
class Smooth:
    pass


@dataclass(frozen=True)
class CyclicQuotient:
    """1/r(a, b, c): cyclic quotient of a smooth threefold germ.

    The action is assumed effective and free in codimension 1; this is a
    documented precondition, not a checked one.
    """

    r: int
    weights: tuple[int, int, int]

    def __post_init__(self) -> None:
        if not _is_index(self.r, 1):
            raise DescriptorError(f"quotient order must be a positive integer, got {self.r}")
        if len(self.weights) != 3 or not all(isinstance(w, int) for w in self.weights):
            raise DescriptorError(f"weights must be three integers, got {self.weights}")


@dataclass(frozen=True)
class QuotientOrder:
    """An n-dimensional quotient singularity known only by its group order."""

    dim: int
    order: int

    def __post_init__(self) -> None:
        if not _is_index(self.dim, 2):
            raise DescriptorError(f"dimension must be an integer >= 2, got {self.dim}")
        if not _is_index(self.order, 1):
            raise DescriptorError(f"group order must be a positive integer, got {self.order}")


@dataclass(frozen=True)
class Ak:
    k: Union[int, float]  # positive integer, or INFINITY for x1x2 + x3^2

    def __post_init__(self) -> None:
        if not _is_index(self.k, 1, allow_infinite=True):
            raise DescriptorError(f"A_k needs k >= 1 or infinity, got {self.k}")


@dataclass(frozen=True)
class Dk:
    k: Union[int, float]  # integer >= 4, or INFINITY for x1x2 + x3^2*x4

    def __post_init__(self) -> None:
        if not _is_index(self.k, 4, allow_infinite=True):
            raise DescriptorError(f"D_k needs k >= 4 or infinity, got {self.k}")


@dataclass(frozen=True)
class Ek:
    k: int

    def __post_init__(self) -> None:
        if self.k not in (6, 7, 8):
            raise DescriptorError(f"E_k needs k in {{6, 7, 8}}, got {self.k}")


@dataclass(frozen=True)
class TransversalADE:
    """Product of a du Val surface singularity with a smooth curve."""

    series: str
    k: int

    def __post_init__(self) -> None:
        if self.series not in ("A", "D", "E"):
            raise DescriptorError(f"series must be A, D or E, got {self.series!r}")
        minimum = {"A": 1, "D": 4, "E": 6}[self.series]
        if not _is_index(self.k, minimum) or (self.series == "E" and self.k > 8):
            raise DescriptorError(f"bad index {self.k} for transversal {self.series}-type")


@dataclass(frozen=True)
class CAClass:
    """Compound du Val class cA_k, known only up to its general hyperplane type."""

    k: int

    def __post_init__(self) -> None:
        if not _is_index(self.k, 0):
            raise DescriptorError(f"cA_k needs k >= 0, got {self.k}")


@dataclass(frozen=True)
class CubicFamily:
    """The family x1*x2 + x3^3 + x4^k, 3 <= k <= 6 (k = 3, 4, 5 are D4, E6, E8)."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or not 3 <= self.k <= 6:
            raise DescriptorError(f"cubic family needs 3 <= k <= 6, got {self.k}")


@dataclass(frozen=True)
class HypersurfaceSupport:
    support: PolySupport


SingularityDescriptor = Union[
    Smooth,
    CyclicQuotient,
    QuotientOrder,
    Ak,
    Dk,
    Ek,
    TransversalADE,
    CAClass,
    CubicFamily,
    HypersurfaceSupport,
]


@dataclass(frozen=True)
class Interval:
    """Volume known only within [lo, hi]."""

    lo: Union[ExactValue, float]
    hi: Union[ExactValue, float]

    def __post_init__(self) -> None:
        if float(self.lo) > float(self.hi):
            raise DescriptorError(f"empty interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class CatalogEntry:
    descriptor: SingularityDescriptor
    volume: Union[ExactValue, Interval]
    mld: Optional[Fraction]
    source: str


@dataclass(frozen=True)
class NvMldCheck:
    holds: bool
    equality: bool


@dataclass(frozen=True)
class Classification:
    ge9: bool
    reason: str


# -- elementary volume rules ----------------------------------------------------


def quotient_volume(n: int, order: int) -> Fraction:
    """Local volume n^n/|G| of a quotient singularity (free in codimension 1)."""
    if not _is_index(n, 2):
        raise DescriptorError(f"dimension must be an integer >= 2, got {n}")
    if not _is_index(order, 1):
        raise DescriptorError(f"group order must be a positive integer, got {order}")
    return Fraction(n**n, order)


def cover_transfer(vol_downstairs, degree: int):
    """Volume upstairs on a degree-d quasi-etale cover: d times the base volume."""
    if not _is_index(degree, 1):
        raise DescriptorError(f"degree must be a positive integer, got {degree}")
    if not float(vol_downstairs) > 0:
        raise DescriptorError(f"volume must be positive, got {vol_downstairs}")
    return degree * vol_downstairs


def ade_family_volume(k: int) -> Fraction:
    """Exact local volume 4(3+k)^3 / (9k^2) of x1*x2 + x3^3 + x4^k."""
    if not isinstance(k, int) or not 3 <= k <= 6:
        raise DescriptorError(f"family parameter must satisfy 3 <= k <= 6, got {k}")
    return Fraction(4 * (3 + k) ** 3, 9 * k**2)


# -- quotient type normalization --------------------------------------------------


def canonical_quotient_type(r: int, weights: tuple[int, int, int]) -> tuple[int, int, int]:
    """Normal form of 1/r(a,b,c) under permutations and generator changes."""
    if r == 1:
        return (0, 0, 0)
    reduced = tuple(w % r for w in weights)
    best = None
    for unit in range(1, r):
        if math.gcd(unit, r) != 1:
            continue
        candidate = tuple(sorted((unit * w) % r for w in reduced))
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


_SMOOTH_QUOTIENT = (0, 0, 0)
# Theorem-listed quotient types with volume >= 9 that are not hypersurfaces.
_QUOTIENT_LIST = {
    (2, (1, 1, 1)),
    (3, (0, 1, 1)),  # 1/3(1,1,0)
    (3, (1, 1, 1)),
    (3, (1, 1, 2)),
}
# Quotient types that are themselves hypersurface germs (du Val x line).
_QUOTIENT_HYPERSURFACE = {
    (2, (0, 1, 1)): "transversal A_1 (so of type cA_1)",
    (3, (0, 1, 2)): "transversal A_2 (so of type cA_2)",
}


# -- defining supports for the hypersurface entries --------------------------------


def defining_support(d: SingularityDescriptor) -> PolySupport:
    """Standard local equation of a hypersurface descriptor, as a support."""
    if isinstance(d, Ak):
        if d.k == INFINITY:
            return parse_polynomial("x1*x2 + x3^2", 4)
        return parse_polynomial(f"x1*x2 + x3^2 + x4^{d.k + 1}", 4)
    if isinstance(d, Dk):
        if d.k == INFINITY:
            return parse_polynomial("x1*x2 + x3^2*x4", 4)
        return parse_polynomial(f"x1*x2 + x3^2*x4 + x4^{d.k - 1}", 4)
    if isinstance(d, Ek):
        tail = {6: "x4^4", 7: "x3*x4^3", 8: "x4^5"}[d.k]
        return parse_polynomial(f"x1*x2 + x3^3 + {tail}", 4)
    if isinstance(d, CubicFamily):
        return parse_polynomial(f"x1*x2 + x3^3 + x4^{d.k}", 4)
    if isinstance(d, HypersurfaceSupport):
        return d.support
    raise DescriptorError(f"{describe(d)} has no defining hypersurface equation")


# -- catalog lookups ---------------------------------------------------------------


_SIX_ROOT_THREE = SurdValue(0, 6, 3)


def catalog_volume(
    d: SingularityDescriptor, opts: OptimizerOptions | None = None
) -> CatalogEntry:
    """Exact volume when one is known, an interval otherwise."""
    if isinstance(d, Smooth):
        return CatalogEntry(d, Fraction(27), Fraction(3), "smooth point: volume n^n = 27")
    if isinstance(d, CyclicQuotient):
        mld = _try_mld(d)
        return CatalogEntry(
            d, quotient_volume(3, d.r), mld,
            "cyclic quotient: 27/r, action free in codimension 1 (assumed)",
        )
    if isinstance(d, QuotientOrder):
        mld = Fraction(d.dim) if d.order == 1 else None
        return CatalogEntry(d, quotient_volume(d.dim, d.order), mld, "quotient: n^n/|G|")
    if isinstance(d, Ak):
        if d.k == 1:
            return CatalogEntry(d, Fraction(16), Fraction(2), "A_1: ordinary double point, 16")
        if d.k == 2:
            return CatalogEntry(d, Fraction(125, 9), Fraction(2), "A_2: 125/9")
        mld = Fraction(2) if d.k != INFINITY else None
        return CatalogEntry(
            d, Fraction(27, 2), mld, "A_k (k >= 3) and A_inf: transversal A_1 value 27/2"
        )
    if isinstance(d, Dk):
        if d.k == 4:
            return CatalogEntry(d, ade_family_volume(3), Fraction(2), "D_4: cubic family k = 3")
        mld = Fraction(2) if d.k != INFINITY else None
        return CatalogEntry(
            d, _SIX_ROOT_THREE, mld,
            "D_k (k >= 5) and D_inf: 6*sqrt(3), attained by the weight (1,1,sqrt(3)-1,4-2*sqrt(3))",
        )
    if isinstance(d, Ek):
        if d.k == 6:
            return CatalogEntry(d, ade_family_volume(4), Fraction(2), "E_6: cubic family k = 4")
        if d.k == 7:
            return CatalogEntry(d, Fraction(250, 27), Fraction(2), "E_7: 250/27")
        return CatalogEntry(d, ade_family_volume(5), Fraction(2), "E_8: cubic family k = 5")
    if isinstance(d, TransversalADE):
        order = _du_val_group_order(d.series, d.k)
        return CatalogEntry(
            d, Fraction(27, order), None,
            f"transversal {d.series}_{d.k}: quotient of order {order}, volume 27/{order}",
        )
    if isinstance(d, CAClass):
        if d.k == 0:
            return CatalogEntry(d, Fraction(27), None, "cA_0 = smooth point")
        if d.k == 1:
            return CatalogEntry(
                d, Interval(Fraction(27, 2), Fraction(16)), None,
                "cA_1 range: transversal A_1 (27/2) up to the ordinary double point (16)",
            )
        if d.k == 2:
            return CatalogEntry(
                d, Interval(Fraction(9), Fraction(32, 3)), None,
                "cA_2 range: at least 9, at most 32/3 by the weight (3,3,2,2)",
            )
        return CatalogEntry(
            d, Interval(Fraction(0), Fraction(8)), None,
            "cA_{>=3}: at most 8 by the weight (2,2,1,1)",
        )
    if isinstance(d, CubicFamily):
        return CatalogEntry(
            d, ade_family_volume(d.k), Fraction(2),
            f"x1*x2 + x3^3 + x4^{d.k}: 4(3+k)^3/(9k^2)",
        )
    if isinstance(d, HypersurfaceSupport):
        result = minimize_bound(d.support, opts)
        upper = min(result.value, 27.0)
        return CatalogEntry(
            d, Interval(Fraction(0), upper), None,
            "generic hypersurface support: monomial-valuation upper bound only",
        )
    raise UnknownVolumeError(f"no volume data for descriptor {d!r}")


def _du_val_group_order(series: str, k: int) -> int:
    if series == "A":
        return k + 1
    if series == "D":
        return 4 * (k - 2)
    return {6: 24, 7: 48, 8: 120}[k]


def _try_mld(d: SingularityDescriptor) -> Optional[Fraction]:
    try:
        return mld_of(d)
    except UnknownMldError:
        return None


def mld_of(d: SingularityDescriptor) -> Fraction:
    """Minimal log discrepancy: 3/r for 1/r(1,1,1), 3 at a smooth point,
    2 for the non-smooth terminal Gorenstein (isolated cDV) entries."""
    if isinstance(d, Smooth):
        return Fraction(3)
    if isinstance(d, CyclicQuotient):
        if d.r == 1:
            return Fraction(3)
        if canonical_quotient_type(d.r, d.weights) == (1, 1, 1):
            return Fraction(3, d.r)
        raise UnknownMldError(f"mld known only for 1/r(1,1,1) quotients, not {describe(d)}")
    if isinstance(d, (Ak, Dk, Ek)) and getattr(d, "k") != INFINITY:
        return Fraction(2)
    if isinstance(d, CubicFamily):
        # Isolated cDV points, so terminal Gorenstein like the named series.
        return Fraction(2)
    raise UnknownMldError(f"no mld data for descriptor {describe(d)}")


def check_nv_mld(d: SingularityDescriptor) -> NvMldCheck:
    """Exact comparison of the local volume against 9*mld.

    Equality holds exactly on the 1/r(1,1,1) family (the smooth point is
    the r = 1 member).
    """
    mld = mld_of(d)
    entry = catalog_volume(d)
    if isinstance(entry.volume, Interval):
        raise UnknownVolumeError(f"{describe(d)} has only an interval volume")
    volume = entry.volume
    threshold = 9 * mld
    return NvMldCheck(holds=not volume > threshold, equality=volume == threshold)


def classify_volume_ge_9(d: SingularityDescriptor) -> Classification:
    """Decision procedure for 'local volume >= 9'.

    True exactly for hypersurface singularities of type cA_{<=2} (including
    every A/D/E and cubic-family normal form) and for cyclic quotients of
    order at most 3.
    """
    if isinstance(d, (Smooth,)):
        return Classification(True, "smooth point: volume 27 >= 9")
    if isinstance(d, CAClass):
        if d.k == 0:
            return Classification(True, "cA_0 = smooth point: volume 27 >= 9")
        if d.k <= 2:
            return Classification(
                True, f"hypersurface clause: every cA_{d.k} singularity has volume >= 9"
            )
        return Classification(
            False, "cA_{>=3}: the weight (2,2,1,1) bounds the volume by 8 < 9"
        )
    if isinstance(d, Ak):
        return Classification(True, "A-type normal form is cA_1: volume >= 9")
    if isinstance(d, (Dk, Ek)):
        return Classification(True, "D/E-type normal form is cA_2: volume >= 9")
    if isinstance(d, CubicFamily):
        return Classification(
            True, "x1*x2 + cubic in (x3, x4) is cA_2: volume >= 9"
        )
    if isinstance(d, TransversalADE):
        if d.series == "A" and d.k <= 2:
            return Classification(
                True, f"transversal A_{d.k} is cA_{d.k}: volume 27/{d.k + 1} >= 9"
            )
        order = _du_val_group_order(d.series, d.k)
        return Classification(
            False, f"quotient of order {order}: volume 27/{order} < 9"
        )
    if isinstance(d, (CyclicQuotient, QuotientOrder)):
        if isinstance(d, QuotientOrder):
            if d.dim != 3:
                raise DescriptorError("classification table is for threefolds only")
            order, type_name = d.order, None
        else:
            order = d.r
            type_name = canonical_quotient_type(d.r, d.weights)
        if order > 3:
            return Classification(False, f"quotient volume 27/{order} < 9")
        if order == 1 or type_name == _SMOOTH_QUOTIENT:
            return Classification(True, "trivial quotient: smooth point, volume 27")
        if type_name is None:
            return Classification(True, f"quotient volume 27/{order} >= 9")
        key = (order, type_name)
        if key in _QUOTIENT_HYPERSURFACE:
            return Classification(
                True, f"hypersurface clause: {_QUOTIENT_HYPERSURFACE[key]}"
            )
        if key in _QUOTIENT_LIST:
            a, b, c = type_name
            return Classification(
                True,
                f"quotient clause: 1/{order}({a},{b},{c}) is on the volume >= 9 list",
            )
        # order <= 3 types not listed above act non-freely in codimension 1,
        # which the descriptor promises away; classify by the volume anyway.
        return Classification(True, f"quotient volume 27/{order} >= 9")
    if isinstance(d, HypersurfaceSupport):
        raise UndecidableClassError(
            "cA-class of a raw support is not computed; classification undecidable"
        )
    raise DescriptorError(f"unsupported descriptor {d!r}")


# -- the ten known values >= 9 ------------------------------------------------------


@dataclass(frozen=True)
class KnownVolume:
    value: ExactValue
    witnesses: tuple[SingularityDescriptor, ...]


def known_volume_list() -> tuple[KnownVolume, ...]:
    """The ten known local volumes in [9, 27], ascending, with witnesses.

    The list is known-at-least: nothing here asserts that it is exhaustive.
    """
    raw: list[KnownVolume] = [
        KnownVolume(
            Fraction(9),
            (CubicFamily(6), CyclicQuotient(3, (1, 1, 1)), TransversalADE("A", 2)),
        ),
        KnownVolume(Fraction(2048, 225), (CubicFamily(5), Ek(8))),
        KnownVolume(Fraction(250, 27), (Ek(7),)),
        KnownVolume(Fraction(343, 36), (CubicFamily(4), Ek(6))),
        KnownVolume(_SIX_ROOT_THREE, (Dk(5), Dk(INFINITY))),
        KnownVolume(Fraction(32, 3), (CubicFamily(3), Dk(4))),
        KnownVolume(
            Fraction(27, 2),
            (Ak(3), Ak(INFINITY), CyclicQuotient(2, (1, 1, 1)), TransversalADE("A", 1)),
        ),
        KnownVolume(Fraction(125, 9), (Ak(2),)),
        KnownVolume(Fraction(16), (Ak(1),)),
        KnownVolume(Fraction(27), (Smooth(),)),
    ]
    return tuple(sorted(raw, key=lambda kv: kv.value))


# -- roster and serialization --------------------------------------------------------


def standard_entries() -> tuple[CatalogEntry, ...]:
    """The dumpable catalog roster."""
    roster: list[SingularityDescriptor] = [
        Smooth(),
        Ak(1), Ak(2), Ak(3), Ak(4), Ak(INFINITY),
        Dk(4), Dk(5), Dk(6), Dk(INFINITY),
        Ek(6), Ek(7), Ek(8),
        CubicFamily(3), CubicFamily(4), CubicFamily(5), CubicFamily(6),
        TransversalADE("A", 1), TransversalADE("A", 2), TransversalADE("A", 3),
        TransversalADE("D", 4), TransversalADE("E", 6),
        CyclicQuotient(2, (1, 1, 1)),
        CyclicQuotient(3, (1, 1, 0)), CyclicQuotient(3, (1, 1, 1)), CyclicQuotient(3, (1, 1, 2)),
        CyclicQuotient(4, (1, 1, 3)), CyclicQuotient(5, (1, 1, 1)),
        CAClass(0), CAClass(1), CAClass(2), CAClass(3),
    ]
    return tuple(catalog_volume(d) for d in roster)


def describe(d: SingularityDescriptor) -> str:
    if isinstance(d, Smooth):
        return "smooth"
    if isinstance(d, CyclicQuotient):
        a, b, c = d.weights
        return f"1/{d.r}({a},{b},{c})"
    if isinstance(d, QuotientOrder):
        return f"quot(dim={d.dim},order={d.order})"
    if isinstance(d, Ak):
        return "A_inf" if d.k == INFINITY else f"A_{d.k}"
    if isinstance(d, Dk):
        return "D_inf" if d.k == INFINITY else f"D_{d.k}"
    if isinstance(d, Ek):
        return f"E_{d.k}"
    if isinstance(d, TransversalADE):
        return f"transversal {d.series}_{d.k}"
    if isinstance(d, CAClass):
        return f"cA_{d.k}"
    if isinstance(d, CubicFamily):
        return f"cubic k={d.k}"
    if isinstance(d, HypersurfaceSupport):
        return f"support[{d.support}]"
    return repr(d)


def value_str(x) -> str:
    if isinstance(x, Interval):
        return f"[{value_str(x.lo)}, {value_str(x.hi)}]"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def value_numeric(x):
    if isinstance(x, Interval):
        return [float(x.lo), float(x.hi)]
    return float(x)


def entry_to_json_dict(entry: CatalogEntry) -> dict:
    return {
        "descriptor": describe(entry.descriptor),
        "volume": value_str(entry.volume),
        "volume_numeric": value_numeric(entry.volume),
        "mld": str(entry.mld) if entry.mld is not None else None,
        "source": entry.source,
    }


_QUOTIENT_RE = re.compile(r"^1/(\d+)\((-?\d+),(-?\d+),(-?\d+)\)$")
_SERIES_RE = re.compile(r"^([ADE])(inf|\d+)$")
_TRANSVERSAL_RE = re.compile(r"^t([ADE])(\d+)$")
_CUBIC_RE = re.compile(r"^cubic\((\d+)\)$")
_QUOT_RE = re.compile(r"^quot\((\d+),(\d+)\)$")
_CA_RE = re.compile(r"^cA(\d+)$")


def parse_descriptor(text: str) -> SingularityDescriptor:
    """Parse the compact descriptor syntax used on the command line."""
    s = text.strip().replace(" ", "")
    if s.lower() == "smooth":
        return Smooth()
    m = _QUOTIENT_RE.match(s)
    if m:
        r = int(m.group(1))
        weights = (int(m.group(2)), int(m.group(3)), int(m.group(4)))
        return CyclicQuotient(r, weights)
    m = _SERIES_RE.match(s)
    if m:
        series = m.group(1)
        k = INFINITY if m.group(2) == "inf" else int(m.group(2))
        if series == "A":
            return Ak(k)
        if series == "D":
            return Dk(k)
        if k == INFINITY:
            raise DescriptorError("E_inf is not a singularity type")
        return Ek(int(k))
    m = _TRANSVERSAL_RE.match(s)
    if m:
        return TransversalADE(m.group(1), int(m.group(2)))
    m = _CUBIC_RE.match(s)
    if m:
        return CubicFamily(int(m.group(1)))
    m = _QUOT_RE.match(s)
    if m:
        return QuotientOrder(int(m.group(1)), int(m.group(2)))
    m = _CA_RE.match(s)
    if m:
        return CAClass(int(m.group(1)))
    raise DescriptorError(
        f"cannot parse descriptor {text!r}; see the command-line help for the syntax"
    )
