"""Square-freeness of bivariate polynomials over the rationals.

A plane-curve germ V(g) is reduced exactly when g has no repeated
irreducible factor, which in characteristic zero is equivalent to
gcd(g, dg/dx, dg/dy) being a nonzero constant.  The gcd is computed
exactly with a primitive pseudo-remainder sequence in Q[y][x]: pseudo
remainders in x, with contents (gcds in Q[y]) split off at every step.
No floating point is involved anywhere.

Polynomials are dicts mapping (x-degree, y-degree) to a nonzero Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .errors import SupportError
from .support import PolySupport

Poly2 = Dict[Tuple[int, int], Fraction]

# Univariate polynomials in y: degree -> coefficient.
_Uni = Dict[int, Fraction]
# Recursive form: x-degree -> univariate coefficient in y.
_Rec = Dict[int, _Uni]


# -- univariate layer (Q[y]) ---------------------------------------------------


def _uni_trim(p: _Uni) -> _Uni:
    return {e: c for e, c in p.items() if c != 0}


def _uni_deg(p: _Uni) -> int:
    return max(p, default=-1)


def _uni_lc(p: _Uni) -> Fraction:
    return p[_uni_deg(p)]


def _uni_sub(p: _Uni, q: _Uni) -> _Uni:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, Fraction(0)) - c
    return _uni_trim(out)


def _uni_mul(p: _Uni, q: _Uni) -> _Uni:
    out: _Uni = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return _uni_trim(out)


def _uni_scale(p: _Uni, c: Fraction) -> _Uni:
    return {e: v * c for e, v in p.items()} if c else {}


def _uni_rem(a: _Uni, b: _Uni) -> _Uni:
    db = _uni_deg(b)
    lb = _uni_lc(b)
    while a and _uni_deg(a) >= db:
        shift = _uni_deg(a) - db
        factor = _uni_lc(a) / lb
        a = _uni_sub(a, {e + shift: c * factor for e, c in b.items()})
    return a


def _uni_gcd(a: _Uni, b: _Uni) -> _Uni:
    a, b = _uni_trim(a), _uni_trim(b)
    while b:
        a, b = b, _uni_rem(a, b)
    if not a:
        return {}
    return _uni_scale(a, 1 / _uni_lc(a))  # monic normal form


def _uni_div_exact(a: _Uni, b: _Uni) -> _Uni:
    """Quotient a/b in Q[y]; b must divide a exactly."""
    quot: _Uni = {}
    db = _uni_deg(b)
    lb = _uni_lc(b)
    while a:
        da = _uni_deg(a)
        if da < db:
            raise ArithmeticError("inexact univariate division")
        shift = da - db
        factor = _uni_lc(a) / lb
        quot[shift] = factor
        a = _uni_sub(a, {e + shift: c * factor for e, c in b.items()})
    return quot


# -- recursive bivariate layer (Q[y][x]) ---------------------------------------


def _to_rec(f: Poly2) -> _Rec:
    rec: _Rec = {}
    for (i, j), c in f.items():
        if c:
            rec.setdefault(i, {})[j] = c
    return {i: _uni_trim(p) for i, p in rec.items() if _uni_trim(p)}


def _from_rec(rec: _Rec) -> Poly2:
    return {(i, j): c for i, p in rec.items() for j, c in p.items() if c}


def _rec_deg(f: _Rec) -> int:
    return max(f, default=-1)


def _rec_trim(f: _Rec) -> _Rec:
    return {i: p for i, p in ((i, _uni_trim(p)) for i, p in f.items()) if p}


def _rec_sub(f: _Rec, g: _Rec) -> _Rec:
    out = {i: dict(p) for i, p in f.items()}
    for i, p in g.items():
        out[i] = _uni_sub(out.get(i, {}), p)
    return _rec_trim(out)


def _rec_mul_uni(f: _Rec, c: _Uni) -> _Rec:
    return _rec_trim({i: _uni_mul(p, c) for i, p in f.items()})


def _prem(f: _Rec, g: _Rec) -> _Rec:
    """Pseudo remainder of f by g with respect to x (up to powers of lc(g))."""
    dg = _rec_deg(g)
    lg = g[dg]
    while f and _rec_deg(f) >= dg:
        df = _rec_deg(f)
        lf = f[df]
        shifted = {i + df - dg: _uni_mul(p, lf) for i, p in g.items()}
        f = _rec_sub(_rec_mul_uni(f, lg), shifted)
    return f


def _content(f: _Rec) -> _Uni:
    c: _Uni = {}
    for p in f.values():
        c = _uni_gcd(c, p)
    return c


def _primitive(f: _Rec) -> _Rec:
    if not f:
        return f
    c = _content(f)
    return {i: _uni_div_exact(p, c) for i, p in f.items()}


# -- public surface -------------------------------------------------------------


def poly_of_support(g: PolySupport) -> Poly2:
    """Coefficient dict of a 2-variable support."""
    if g.nvars != 2:
        raise SupportError(f"expected a bivariate support, got nvars={g.nvars}")
    return {(exp[0], exp[1]): coef for exp, coef in g.terms}


def poly_mul(f: Poly2, g: Poly2) -> Poly2:
    out: Poly2 = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return {k: c for k, c in out.items() if c}


def poly_diff(f: Poly2, axis: int) -> Poly2:
    out: Poly2 = {}
    for (i, j), c in f.items():
        if axis == 0 and i > 0:
            out[(i - 1, j)] = c * i
        elif axis == 1 and j > 0:
            out[(i, j - 1)] = c * j
    return out


def poly_total_degree(f: Poly2) -> int:
    return max((i + j for i, j in f), default=-1)


def poly_gcd(f: Poly2, g: Poly2) -> Poly2:
    """gcd in Q[x, y], normalized to monic content; gcd(f, 0) = f."""
    F, G = _to_rec(f), _to_rec(g)
    if not F:
        return _from_rec(G)
    if not G:
        return _from_rec(F)
    c = _uni_gcd(_content(F), _content(G))
    a, b = _primitive(F), _primitive(G)
    if _rec_deg(a) < _rec_deg(b):
        a, b = b, a
    while b and _rec_deg(b) > 0:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if b:  # nonzero remainder of x-degree 0: primitive parts are coprime
        prim: _Rec = {0: {0: Fraction(1)}}
    else:
        prim = _primitive(a)
    return _from_rec(_rec_mul_uni(prim, c))


def is_reduced_bivariate(g: PolySupport) -> bool:
    """True iff the plane curve V(g) is reduced (g has no repeated factor).

    Decided by whether gcd(g, dg/dx, dg/dy) has degree 0, computed over
    exact rationals.
    """
    f = poly_of_support(g)
    if not f:
        raise SupportError("zero polynomial")
    h = poly_gcd(poly_gcd(f, poly_diff(f, 0)), poly_diff(f, 1))
    return poly_total_degree(h) == 0
