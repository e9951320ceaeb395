"""Minimization of the volume bound over the open positive weight cone.

The bound is scale-invariant in w, so the search domain is the open unit
simplex {w > 0, sum w = 1}.  Two layers cooperate:

  * ``grid_search``: exact evaluation at every interior rational point
    (k1/D, ..., km/D) with k_i >= 1 -- a deterministic oracle whose
    minimum is a certified upper bound for the infimum.
  * ``local_refine``: a reflection/contraction simplex descent (Nelder-
    Mead) in float arithmetic, restricted to the simplex affine hull;
    invalid points (some w_i <= 0, or w_sum <= v_w(f)) evaluate to +inf,
    so the contraction steps can never leave the valid region.

``minimize_bound`` runs the grid, refines from the grid witness and from
seeded random interior starts, then re-runs refinement seeded at the
analytic center of the cone on which the active monomial set is constant
(v_w is linear there, so the objective is smooth).  Results are
deterministic for fixed options; the infimum may live on the simplex
boundary, which is reported as status ``boundary-suspect``, not an error.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import InputError, NoValidWeightError
from .support import ExponentVector, PolySupport, prune_support
from .valuation import WeightVector

_ACTIVE_REL_TOL = 1e-9


class Status(str, Enum):
    CONVERGED = "converged"
    BOUNDARY_SUSPECT = "boundary-suspect"
    MAX_ITERS = "max-iters"


@dataclass(frozen=True)
class OptimizerOptions:
    grid_denominator: int = 60
    tol: float = 1e-10
    max_iters: int = 5000
    restarts: int = 8
    seed: int = 0

    def __post_init__(self) -> None:
        if self.grid_denominator < 4:
            raise InputError(f"grid_denominator must be >= 4, got {self.grid_denominator}")
        if not self.tol > 0:
            raise InputError(f"tol must be positive, got {self.tol}")
        if self.max_iters < 1:
            raise InputError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.restarts < 0:
            raise InputError(f"restarts must be >= 0, got {self.restarts}")


@dataclass(frozen=True)
class BoundResult:
    """Outcome of a bound minimization.

    value is nv_bound(f, witness) in float arithmetic; witness lies on the
    open unit simplex; oracle_value, when present, is the exact grid
    minimum (an upper bound the refinement can only improve on).
    """

    value: float
    witness: WeightVector
    active: tuple[ExponentVector, ...]
    status: Status
    oracle_value: Optional[Fraction] = None


def normalize_weight(w) -> WeightVector:
    """Rescale so the entries sum to 1 (the bound is invariant under this)."""
    w = WeightVector.of(w)
    total = w.total
    return WeightVector.of(tuple(wi / total for wi in w.entries))


# -- exact grid oracle ---------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` positive ints summing to `total`, in lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def grid_search(f: PolySupport, denominator: int) -> tuple[WeightVector, Fraction]:
    """Exact minimum of the bound over the interior D-grid of the simplex.

    Evaluates every weight (k1/D, ..., km/D) with k_i >= 1, skipping
    invalid points (w_sum <= v); returns the exact minimal value and its
    lexicographically smallest witness.
    """
    m = f.nvars
    if denominator < m:
        raise InputError(
            f"denominator {denominator} is too small for {m} variables"
        )
    f = prune_support(f)
    n = m - 1
    # (index, entry) pairs per exponent, skipping zeros: the inner loop is hot.
    sparse = [[(i, e) for i, e in enumerate(exp) if e] for exp in f.exponents]
    best_num = best_den = None
    best_k: tuple[int, ...] | None = None
    for k in _compositions(denominator, m):
        vd = min(sum(k[i] * e for i, e in entry) for entry in sparse)
        if vd >= denominator:
            continue
        num = (denominator - vd) ** n * vd
        den = math.prod(k)
        if best_num is None or num * best_den < best_num * den:
            best_num, best_den, best_k = num, den, k
    if best_k is None:
        raise NoValidWeightError(
            f"no grid point with denominator {denominator} satisfies w_sum > v_w(f)"
        )
    witness = WeightVector.of(tuple(Fraction(ki, denominator) for ki in best_k))
    return witness, Fraction(best_num, best_den)


# -- float objective -----------------------------------------------------------


def _make_objective(f: PolySupport, n: int):
    sparse = [[(i, e) for i, e in enumerate(exp) if e] for exp in f.exponents]

    def objective(w: Sequence[float]) -> float:
        prod = 1.0
        for wi in w:
            if wi <= 0.0:
                return math.inf
            prod *= wi
        v = min(sum(w[i] * e for i, e in entry) for entry in sparse)
        ld = sum(w) - v
        if ld <= 0.0:
            return math.inf
        return ld**n * v / prod

    return objective


def _renormalized(point: Sequence[float]) -> tuple[float, ...]:
    if min(point) > 0.0:
        total = sum(point)
        return tuple(x / total for x in point)
    return tuple(point)


def _active_exponents(
    f: PolySupport, w: Sequence[float]
) -> tuple[ExponentVector, ...]:
    dots = [
        (sum(wi * e for wi, e in zip(w, exp)), exp) for exp in f.exponents
    ]
    v = min(d for d, _ in dots)
    return tuple(exp for d, exp in dots if d <= v * (1.0 + _ACTIVE_REL_TOL))


# -- simplex descent -----------------------------------------------------------


def _nelder_mead(
    objective, w0: tuple[float, ...], opts: OptimizerOptions
) -> tuple[tuple[float, ...], float, Status]:
    m = len(w0)
    delta = 0.1
    vertices = [w0]
    for j in range(m - 1):
        mixed = tuple(
            (1.0 - delta) * w0[i] + (delta if i == j else 0.0) for i in range(m)
        )
        vertices.append(mixed)
    simplex = [(v, objective(v)) for v in vertices]

    alpha, gamma, rho, sigma = 1.0, 2.0, 0.5, 0.5
    status = Status.MAX_ITERS
    for _ in range(opts.max_iters):
        simplex.sort(key=lambda pair: pair[1])
        diameter = max(
            max(abs(a - b) for a, b in zip(p[0], q[0]))
            for i, p in enumerate(simplex)
            for q in simplex[i + 1 :]
        )
        if diameter < opts.tol:
            status = Status.CONVERGED
            break

        centroid = tuple(
            sum(p[0][i] for p in simplex[:-1]) / (len(simplex) - 1) for i in range(m)
        )
        worst, worst_val = simplex[-1]
        reflected = _renormalized(
            tuple(c + alpha * (c - x) for c, x in zip(centroid, worst))
        )
        r_val = objective(reflected)

        if simplex[0][1] <= r_val < simplex[-2][1]:
            simplex[-1] = (reflected, r_val)
            continue
        if r_val < simplex[0][1]:
            expanded = _renormalized(
                tuple(c + gamma * (c - x) for c, x in zip(centroid, worst))
            )
            e_val = objective(expanded)
            simplex[-1] = (expanded, e_val) if e_val < r_val else (reflected, r_val)
            continue
        if r_val < worst_val:  # outside contraction
            contracted = _renormalized(
                tuple(c + rho * (r - c) for c, r in zip(centroid, reflected))
            )
        else:  # inside contraction
            contracted = _renormalized(
                tuple(c + rho * (x - c) for c, x in zip(centroid, worst))
            )
        c_val = objective(contracted)
        if c_val < min(r_val, worst_val):
            simplex[-1] = (contracted, c_val)
            continue
        best = simplex[0][0]
        simplex = [
            (
                _renormalized(tuple(b + sigma * (x - b) for b, x in zip(best, p[0]))),
                None,
            )
            for p in simplex
        ]
        simplex = [(v, objective(v)) for v, _ in simplex]

    simplex.sort(key=lambda pair: pair[1])
    best_point, best_val = simplex[0]
    if not math.isfinite(best_val) or min(best_point) < opts.tol:
        status = Status.BOUNDARY_SUSPECT
    return best_point, best_val, status


def local_refine(f: PolySupport, w0, opts: OptimizerOptions | None = None) -> BoundResult:
    """Simplex descent on the normalized weight simplex from one start.

    Terminates when the simplex diameter drops below opts.tol or after
    opts.max_iters iterations; a best point hugging the simplex boundary
    (some w_i below tol) is flagged boundary-suspect.
    """
    opts = opts or OptimizerOptions()
    pruned = prune_support(f)
    w0 = normalize_weight(WeightVector.of(w0)).as_floats()
    objective = _make_objective(pruned, f.nvars - 1)
    point, value, status = _nelder_mead(objective, w0, opts)
    active = _active_exponents(pruned, point) if math.isfinite(value) else ()
    return BoundResult(value, WeightVector.of(point), active, status)


# -- active-cone restart --------------------------------------------------------


def _active_cone_center(
    f: PolySupport, witness: Sequence[float]
) -> Optional[tuple[float, ...]]:
    """Analytic center of the normal cone slice where the active set is constant.

    On that cone the active dot products agree and stay minimal, so the
    feasible set is {E w = d, slacks > 0}; the center maximizes the sum of
    log-slacks via Newton steps on the affine slice.  Returns None when the
    cone has empty interior or the iteration cannot find a feasible point.
    """
    m = len(witness)
    exps = f.exponents
    dots = [sum(wi * e for wi, e in zip(witness, exp)) for exp in exps]
    v = min(dots)
    active = [np.array(exp, dtype=float) for exp, d in zip(exps, dots) if d <= v * (1.0 + _ACTIVE_REL_TOL)]
    inactive = [np.array(exp, dtype=float) for exp, d in zip(exps, dots) if d > v * (1.0 + _ACTIVE_REL_TOL)]

    rows = [active[i] - active[0] for i in range(1, len(active))]
    rows.append(np.ones(m))
    E = np.vstack(rows)
    d = np.zeros(len(rows))
    d[-1] = 1.0

    # Slack rows: w_i > 0 and (b - a0).w > 0 for inactive b.
    slack_rows = [np.eye(m)[i] for i in range(m)] + [b - active[0] for b in inactive]
    S = np.vstack(slack_rows)

    w_proj, *_ = np.linalg.lstsq(E, d, rcond=None)
    if np.max(np.abs(E @ w_proj - d)) > 1e-9:
        return None
    _, sv, vt = np.linalg.svd(E)
    rank = int(np.sum(sv > 1e-12 * max(sv[0], 1.0)))
    basis = vt[rank:].T  # null space of E
    if basis.shape[1] == 0:
        w = w_proj
        if np.min(S @ w) > 0:
            return tuple(float(x) for x in w / w.sum())
        return None

    # Pull the start toward the projected witness, which is nearly feasible.
    w_start = w_proj + basis @ (basis.T @ (np.asarray(witness, dtype=float) - w_proj))
    if np.min(S @ w_start) <= 0:
        w_start = w_proj
    if np.min(S @ w_start) <= 0:
        return None

    z = np.zeros(basis.shape[1])
    base = w_start
    for _ in range(60):
        w = base + basis @ z
        s = S @ w
        grad = basis.T @ (S.T @ (1.0 / s))
        SN = S @ basis
        hess = (SN * (1.0 / s**2)[:, None]).T @ SN
        try:
            step = np.linalg.solve(hess, grad)
        except np.linalg.LinAlgError:
            return None
        # Backtrack to stay strictly feasible.
        t = 1.0
        for _ in range(50):
            s_new = S @ (base + basis @ (z + t * step))
            if np.min(s_new) > 0:
                break
            t *= 0.5
        else:
            return None
        z = z + t * step
        if np.linalg.norm(t * step) < 1e-12:
            break
    w = base + basis @ z
    if np.min(S @ w) <= 0 or np.min(w) <= 0:
        return None
    return tuple(float(x) for x in w / w.sum())


# -- top-level minimization ------------------------------------------------------


def _better(candidate: BoundResult, incumbent: BoundResult | None) -> bool:
    if incumbent is None:
        return True
    if candidate.value != incumbent.value:
        return candidate.value < incumbent.value
    return candidate.witness.entries < incumbent.witness.entries


def minimize_bound(
    f: PolySupport, opts: OptimizerOptions | None = None, threads: int = 1
) -> BoundResult:
    """Grid oracle plus refinement from the grid witness and random restarts.

    Deterministic for fixed options: restart batches may run on several
    threads, but the reduction is ordered, so the result is identical to a
    serial run.  Propagates the grid's no-valid-weight error.
    """
    opts = opts or OptimizerOptions()
    pruned = prune_support(f)
    grid_witness, oracle = grid_search(pruned, opts.grid_denominator)

    m = pruned.nvars
    rng = random.Random(opts.seed)
    starts: list[tuple[float, ...]] = [grid_witness.as_floats()]
    for _ in range(opts.restarts):
        raw = [rng.uniform(0.05, 1.0) for _ in range(m)]
        total = sum(raw)
        starts.append(tuple(x / total for x in raw))

    def refine(start: tuple[float, ...]) -> BoundResult:
        return local_refine(pruned, start, opts)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(refine, starts))
    else:
        results = [refine(s) for s in starts]

    best: BoundResult | None = None
    for res in results:  # ordered reduction: ties resolved by start order/witness
        if _better(res, best):
            best = res
    assert best is not None

    # Restart from the analytic center of the best point's active cone: the
    # objective is smooth there, so a fresh simplex polishes kink optima.
    for _ in range(2):
        if not math.isfinite(best.value):
            break
        center = _active_cone_center(pruned, best.witness.as_floats())
        if center is None:
            break
        polished = local_refine(pruned, center, opts)
        if _better(polished, best):
            best = polished
        else:
            break

    return BoundResult(best.value, best.witness, best.active, best.status, oracle)
