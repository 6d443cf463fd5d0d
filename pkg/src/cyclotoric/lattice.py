"""Exact lattice-point enumeration in dilations of the homogenised polytope.

Enumeration runs by default in the triangularised coordinates, where
vertex entries are running gap products instead of raw powers, and maps
results back through the inverse row-operation matrix; a moment-frame
path exists for cross-checking.  Candidate ranges come from the vertex
coordinate extrema and are narrowed per coordinate by the facet
inequalities, so the recursion only visits feasible prefixes.

A budget caps the bounding-box volume: instances that would grind fail
fast with BudgetExceeded instead.  The default is 10**8 candidates and
can be overridden per call or through the CYCLOTORIC_BUDGET environment
variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb

from .core import CycloParams, InvalidParameters, inverse_transform_factor, transform, vertex
from .faces import (
    MOMENT,
    TRANSFORMED,
    facet_hyperplane,
    facets,
    require_uniform_frame,
    transport_to_transformed,
)
from .intlinalg import mat_vec

DEFAULT_BUDGET = 10**8
BUDGET_ENV_VAR = "CYCLOTORIC_BUDGET"


class BudgetExceeded(RuntimeError):
    """Bounding box larger than the enumeration budget."""


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV_VAR)
    return int(env) if env else DEFAULT_BUDGET


def cone_halfspaces(p: CycloParams, frame: str = MOMENT) -> list:
    hps = [facet_hyperplane(w, p) for w in facets(p)]
    if frame == TRANSFORMED:
        hps = [transport_to_transformed(h, p) for h in hps]
    elif frame != MOMENT:
        raise ValueError(f"unknown frame {frame!r}")
    return hps


def _vertex_columns(p: CycloParams, frame: str) -> list[tuple[int, ...]]:
    if frame == MOMENT:
        return [vertex(p, i) for i in range(1, p.n + 1)]
    tm = transform(p)
    return [tm.column(i) for i in range(1, p.n + 1)]


def _scan_box(k, lows, highs, normals, eps):
    """All integer points (k, z_1..z_d) in the box with a.z >= eps for every a.

    Coordinates are fixed left to right; each inequality narrows the
    current coordinate range using interval bounds on the still-free
    coordinates, so by the last nonzero coordinate of a normal that
    inequality is fully enforced.
    """
    d = len(lows)
    items = []
    for a in normals:
        maxfut = [0] * (d + 2)
        for t in range(d, 0, -1):
            maxfut[t] = maxfut[t + 1] + max(a[t] * lows[t - 1], a[t] * highs[t - 1])
        items.append((a, maxfut))
    out = []
    prefix = [k] + [0] * d

    def rec(t: int, partials) -> None:
        if t > d:
            out.append(tuple(prefix))
            return
        lo, hi = lows[t - 1], highs[t - 1]
        for (a, maxfut), part in zip(items, partials):
            at = a[t]
            rest = maxfut[t + 1]
            if at == 0:
                if part + rest < eps:  # a_t is zero: prune on reachability
                    return
            elif at > 0:
                need = eps - part - rest
                bound = -((-need) // at)  # ceil division
                if bound > lo:
                    lo = bound
            else:
                cap = part + rest - eps
                bound = cap // (-at)  # floor division
                if bound < hi:
                    hi = bound
        if lo > hi:
            return
        for z in range(lo, hi + 1):
            prefix[t] = z
            rec(t + 1, [part + a[t] * z for (a, _), part in zip(items, partials)])

    rec(1, [a[0] * k for a, _ in items])
    return out


def enumerate_points(
    p: CycloParams,
    k: int,
    interior_only: bool = False,
    *,
    frame: str = TRANSFORMED,
    budget: int | None = None,
) -> list[tuple[int, ...]]:
    """Lattice points of the degree-k dilation slice, in moment coordinates.

    interior_only keeps only points with strictly positive slack on every
    facet.  `frame` selects the coordinates enumeration works in; output
    is always mapped back to moment coordinates and sorted
    lexicographically, so both frames must agree point for point.
    """
    if k < 0:
        raise InvalidParameters("dilation degree must be nonnegative")
    cols = _vertex_columns(p, frame)
    d = p.d
    lows = [k * min(c[t] for c in cols) for t in range(1, d + 1)]
    highs = [k * max(c[t] for c in cols) for t in range(1, d + 1)]
    volume = 1
    for lo, hi in zip(lows, highs):
        volume *= hi - lo + 1
    cap = resolve_budget(budget)
    if volume > cap:
        raise BudgetExceeded(f"bounding box holds {volume} candidates (budget {cap})")
    hps = cone_halfspaces(p, frame)
    require_uniform_frame(hps, frame)
    normals = [h.normal for h in hps]
    pts = _scan_box(k, lows, highs, normals, 1 if interior_only else 0)
    if frame == TRANSFORMED:
        uinv = inverse_transform_factor(p)
        pts = [mat_vec(uinv, z) for z in pts]
    return sorted(pts)


def ehrhart_counts(p: CycloParams, k_max: int, *, budget: int | None = None) -> list[int]:
    """Lattice-point counts of the dilations 0..k_max."""
    if k_max < 0:
        raise InvalidParameters("k_max must be nonnegative")
    return [len(enumerate_points(p, k, budget=budget)) for k in range(k_max + 1)]


def interior_count(p: CycloParams, k: int, *, budget: int | None = None) -> int:
    return len(enumerate_points(p, k, True, budget=budget))


@dataclass(frozen=True)
class HStarVector:
    """Numerator coefficients of the lattice-point generating series."""

    h: tuple[int, ...]

    @property
    def normalized_volume(self) -> int:
        return sum(self.h)

    def is_palindromic(self) -> bool:
        """Coefficient symmetry after trailing zeros are dropped."""
        coeffs = list(self.h)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs == coeffs[::-1]


def h_star(p: CycloParams, *, budget: int | None = None) -> HStarVector:
    """Binomial transform of the counts 0..d; entries are always nonnegative.

    A negative entry or a leading entry other than 1 can only come from a
    broken enumeration, so either raises.
    """
    counts = ehrhart_counts(p, p.d, budget=budget)
    d = p.d
    h = []
    for j in range(d + 1):
        h.append(sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(j + 1)))
    if h[0] != 1 or any(x < 0 for x in h):
        raise ArithmeticError(f"invalid h* transform {h}; enumeration is inconsistent")
    return HStarVector(tuple(h))
