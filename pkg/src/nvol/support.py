"""Polynomial supports: the exponent/coefficient data of a power-series germ.

A ``PolySupport`` is a finite set of monomials x^a with nonzero rational
coefficients in variables x1..x{nvars}, no constant term (the germ vanishes
at the origin).  The valuation machinery only consumes the exponent set;
coefficients are carried so supports round-trip through parsing and JSON.

Exponent vectors are plain tuples of nonnegative ints.  Terms are stored
sorted by exponent, so equal supports compare and hash equal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ParseError, SupportError

ExponentVector = tuple[int, ...]
CoefficientLike = Union[int, str, Fraction]


@dataclass(frozen=True)
class PolySupport:
    """Support of a polynomial germ: nvars and sorted (exponent, coefficient) pairs."""

    nvars: int
    terms: tuple[tuple[ExponentVector, Fraction], ...]

    def __post_init__(self) -> None:
        if self.nvars < 2:
            raise SupportError(f"need at least 2 variables, got {self.nvars}")
        if not self.terms:
            raise SupportError("empty support")
        seen: set[ExponentVector] = set()
        for exp, coef in self.terms:
            if len(exp) != self.nvars:
                raise SupportError(
                    f"exponent {exp} has length {len(exp)}, expected {self.nvars}"
                )
            if any(e < 0 or not isinstance(e, int) for e in exp):
                raise SupportError(f"negative or non-integer exponent in {exp}")
            if coef == 0:
                raise SupportError(f"zero coefficient stored for {exp}")
            if all(e == 0 for e in exp):
                raise SupportError("constant term: the germ must vanish at the origin")
            if exp in seen:
                raise SupportError(f"duplicate exponent {exp}")
            seen.add(exp)

    @classmethod
    def from_terms(
        cls, nvars: int, terms: Mapping[Iterable[int], CoefficientLike]
    ) -> PolySupport:
        """Build a support from an {exponent: coefficient} mapping.

        Zero coefficients are rejected by the invariants, not silently
        dropped; combine like terms before calling (the parser does).
        """
        fixed = tuple(
            sorted((tuple(int(e) for e in exp), Fraction(coef)) for exp, coef in terms.items())
        )
        return cls(nvars, fixed)

    @property
    def exponents(self) -> tuple[ExponentVector, ...]:
        return tuple(exp for exp, _ in self.terms)

    def coefficient(self, exp: Iterable[int]) -> Fraction:
        key = tuple(exp)
        for e, c in self.terms:
            if e == key:
                return c
        return Fraction(0)

    def __str__(self) -> str:
        parts = []
        for exp, coef in self.terms:
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e != 0
            )
            parts.append(f"{coef}*{mono}" if coef != 1 else mono)
        return " + ".join(parts)

    # -- JSON wire format ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(exp), "coef": str(coef)} for exp, coef in self.terms
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> PolySupport:
        try:
            nvars = int(payload["nvars"])
            terms = {
                tuple(int(e) for e in t["exp"]): Fraction(str(t["coef"]))
                for t in payload["terms"]
            }
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SupportError(f"malformed support JSON: {exc}") from exc
        return cls.from_terms(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> PolySupport:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SupportError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(payload)


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[\^*+/-])|(?P<bad>\S))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        for kind in ("int", "var", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, nvars: int) -> PolySupport:
    """Parse a sum of signed monomial terms into a ``PolySupport``.

    Terms look like ``3/2*x1^2*x4`` with integer or rational coefficients
    and nonnegative integer exponents; ``x1*x1`` and ``x1^2`` are
    equivalent.  Like terms are combined and cancelled terms dropped.
    """
    if nvars < 2:
        raise SupportError(f"need at least 2 variables, got {nvars}")
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)

    terms: dict[ExponentVector, Fraction] = {}
    i = 0
    n = len(tokens)

    def expect_int(after: str) -> tuple[int, int]:
        nonlocal i
        if i >= n or tokens[i][0] != "int":
            pos = tokens[i][2] if i < n else len(text)
            raise ParseError(f"expected integer after {after!r}", pos)
        value, pos = int(tokens[i][1]), tokens[i][2]
        i += 1
        return value, pos

    while i < n:
        sign = 1
        # Leading sign of the term (required between terms, optional up front).
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("dangling sign", tokens[-1][2])

        coef = Fraction(sign)
        exp = [0] * nvars
        expect_factor = True
        while i < n:
            kind, value, pos = tokens[i]
            if expect_factor:
                if kind == "int":
                    i += 1
                    numerator = int(value)
                    if i < n and tokens[i][0] == "op" and tokens[i][1] == "/":
                        i += 1
                        denominator, dpos = expect_int("/")
                        if denominator == 0:
                            raise ParseError("zero denominator", dpos)
                        coef *= Fraction(numerator, denominator)
                    else:
                        coef *= numerator
                elif kind == "var":
                    index = int(value[1:])
                    if not 1 <= index <= nvars:
                        raise ParseError(
                            f"unknown variable {value!r} (expected x1..x{nvars})", pos
                        )
                    i += 1
                    power = 1
                    if i < n and tokens[i][0] == "op" and tokens[i][1] == "^":
                        i += 1
                        power, _ = expect_int("^")
                    exp[index - 1] += power
                else:
                    raise ParseError(f"expected a coefficient or variable, got {value!r}", pos)
                expect_factor = False
            else:
                if kind == "op" and value == "*":
                    i += 1
                    expect_factor = True
                elif kind == "op" and value in "+-":
                    break
                else:
                    raise ParseError(f"expected '*', '+' or '-', got {value!r}", pos)
        if expect_factor:
            raise ParseError("dangling '*'", tokens[i - 1][2] if i > 0 else 0)

        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coef
        if terms[key] == 0:
            del terms[key]

    if not terms:
        raise SupportError("empty support after cancellation")
    if (0,) * nvars in terms:
        raise SupportError("constant term: the germ must vanish at the origin")
    return PolySupport.from_terms(nvars, terms)


def infer_nvars(text: str) -> int:
    """Largest variable index mentioned in an expression (at least 2)."""
    indices = [int(m.group(1)) for m in re.finditer(r"x(\d+)", text)]
    if not indices:
        raise ParseError("no variables found", 0)
    return max(2, max(indices))


# -- elementary measurements ---------------------------------------------------


def multiplicity(f: PolySupport) -> int:
    """Order of vanishing at the origin: min total degree over the support."""
    return min(sum(exp) for exp in f.exponents)


def _dominates(a: ExponentVector, b: ExponentVector) -> bool:
    return a != b and all(x >= y for x, y in zip(a, b))


def prune_support(f: PolySupport) -> PolySupport:
    """Drop every term whose exponent coordinatewise dominates another's.

    For strictly positive weights the min of w.a over the pruned support
    equals the min over the full support, since a dominating exponent can
    never achieve a strictly smaller dot product.
    """
    exps = f.exponents
    kept = {
        exp: coef
        for exp, coef in f.terms
        if not any(_dominates(exp, other) for other in exps)
    }
    return PolySupport.from_terms(f.nvars, kept)
