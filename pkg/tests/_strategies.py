"""Shared hypothesis strategies for instance generation."""

from __future__ import annotations

from hypothesis import strategies as st

from cyclotoric.core import CycloParams


@st.composite
def cyclo_params(draw, max_d: int = 4, max_n: int = 7, max_gap: int = 4, min_d: int = 1):
    d = draw(st.integers(min_d, min(max_d, max_n - 1)))
    n = draw(st.integers(d + 1, max_n))
    gaps = draw(st.lists(st.integers(1, max_gap), min_size=n - 1, max_size=n - 1))
    start = draw(st.integers(-30, 30))
    tau = [start]
    for g in gaps:
        tau.append(tau[-1] + g)
    return CycloParams(d, tuple(tau))


@st.composite
def params_with_subset(draw, max_d: int = 4, max_n: int = 7, max_gap: int = 4):
    p = draw(cyclo_params(max_d, max_n, max_gap))
    size = draw(st.integers(1, p.n))
    subset = tuple(sorted(draw(st.permutations(range(1, p.n + 1)))[:size]))
    return p, subset
