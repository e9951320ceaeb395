"""K-moduli screening of Fano threefolds by anticanonical volume.

For a K-semistable Q-Fano threefold of volume V = (-K_X)^3, every point
satisfies vol(x, X) >= 27V/64.  Combined with the threefold
classification of volumes >= 9 this pins down the allowed singularity
classes in three cumulative regimes (V >= 26, V >= 22, V >= 11); a
Q-Gorenstein smoothable X additionally never carries 1/2(1,1,1) points.
All threshold comparisons are exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InputError

RationalLike = Union[int, str, Fraction]

# Singularity-class tags, from narrow to broad.
CA1 = "cA1"
CA2_ISOLATED = "isolated-cA2"
D_INFINITY = "D-infinity"
QUOT_HALF = "cyclic-quotient-1/2(1,1,1)"
GORENSTEIN_CANONICAL = "gorenstein-canonical"
NONGOR_QUOT_CA2 = "non-gorenstein:cyclic-quotient-of-cA<=2-hypersurface"
NO_RESTRICTION = "no-restriction"

# Which narrower tags each broad tag subsumes (reflexivity is implicit).
_SUBSUMES = {
    GORENSTEIN_CANONICAL: {CA1, CA2_ISOLATED, D_INFINITY},
    NONGOR_QUOT_CA2: {QUOT_HALF},
    NO_RESTRICTION: {
        CA1, CA2_ISOLATED, D_INFINITY, QUOT_HALF,
        GORENSTEIN_CANONICAL, NONGOR_QUOT_CA2,
    },
}

R26 = "R26"
R22 = "R22"
R11 = "R11"


@dataclass(frozen=True)
class AllowedClass:
    tag: str
    citation: str


@dataclass(frozen=True)
class ScreeningReport:
    V: Fraction
    liu_bound: Fraction
    regime: frozenset[str]
    allowed: tuple[AllowedClass, ...]
    smoothable: bool
    justification: tuple[str, ...]

    @property
    def allowed_tags(self) -> frozenset[str]:
        return frozenset(a.tag for a in self.allowed)

    def to_json_dict(self) -> dict:
        return {
            "volume": str(self.V),
            "volume_numeric": float(self.V),
            "liu_bound": str(self.liu_bound),
            "liu_bound_numeric": float(self.liu_bound),
            "regime": sorted(self.regime),
            "allowed": [
                {"class": a.tag, "citation": a.citation} for a in self.allowed
            ],
            "smoothable": self.smoothable,
            "justification": list(self.justification),
        }


def tag_subsumes(broad: str, narrow: str) -> bool:
    return broad == narrow or narrow in _SUBSUMES.get(broad, ())


def allowed_shrinks(tighter: frozenset[str], looser: frozenset[str]) -> bool:
    """True when every class allowed at the tighter level is still allowed
    at the looser level (inclusion up to tag subsumption)."""
    return all(any(tag_subsumes(b, t) for b in looser) for t in tighter)


def liu_lower_bound(V: RationalLike) -> Fraction:
    """Lower bound 27V/64 for local volumes on a K-semistable Fano threefold."""
    V = Fraction(V)
    if V <= 0:
        raise InputError(f"anticanonical volume must be positive, got {V}")
    return Fraction(27) * V / 64


def screen_fano(V: RationalLike, smoothable: bool = False) -> ScreeningReport:
    """Allowed singularity classes for a K-semistable Fano threefold of volume V.

    Regime flags are cumulative (V >= 26 implies the weaker statements).
    The reported allowed list comes from the strongest active regime; the
    smoothable flag strikes 1/2(1,1,1) from every list.
    """
    V = Fraction(V)
    liu = liu_lower_bound(V)
    regime = frozenset(
        tag for tag, threshold in ((R26, 26), (R22, 22), (R11, 11)) if V >= threshold
    )

    justification: list[str] = [f"local volume >= 27V/64 = {liu} at every point"]
    if R26 in regime:
        allowed = [
            AllowedClass(CA1, "V >= 26: every non-smooth point is cA_1 or 1/2(1,1,1)"),
            AllowedClass(QUOT_HALF, "V >= 26: every non-smooth point is cA_1 or 1/2(1,1,1)"),
        ]
        justification.append(
            f"{liu} > 32/3 rules out every cA_2 class (their volumes are at most 32/3)"
        )
    elif R22 in regime:
        allowed = [
            AllowedClass(CA1, "V >= 22 allowed list"),
            AllowedClass(CA2_ISOLATED, "V >= 22 allowed list"),
            AllowedClass(D_INFINITY, "V >= 22 allowed list"),
            AllowedClass(QUOT_HALF, "V >= 22 allowed list"),
        ]
        justification.append(
            f"{liu} > 9 forces the volume >= 9 classification at every point"
        )
    elif R11 in regime:
        allowed = [
            AllowedClass(
                GORENSTEIN_CANONICAL,
                "V >= 11 constrains only non-Gorenstein points beyond canonicity",
            ),
            AllowedClass(
                NONGOR_QUOT_CA2,
                "V >= 11: a non-Gorenstein point is a cyclic quotient of a cA_{<=2} hypersurface point",
            ),
        ]
        justification.append(
            f"index-1 covers double the local volume: 2*{liu} > 9"
        )
    else:
        allowed = [AllowedClass(NO_RESTRICTION, "below every screening threshold")]
        justification.append("V < 11: no restriction from this screening")

    if smoothable:
        allowed = [a for a in allowed if a.tag != QUOT_HALF]
        justification.append(
            "Q-Gorenstein smoothable: 1/2(1,1,1) quotients are excluded (they are rigid)"
        )

    return ScreeningReport(
        V=V,
        liu_bound=liu,
        regime=regime,
        allowed=tuple(allowed),
        smoothable=smoothable,
        justification=tuple(justification),
    )
