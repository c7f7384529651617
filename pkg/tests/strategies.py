"""Hypothesis strategies and seeded generators for random expressions."""

from __future__ import annotations

import random

from gmpy2 import mpq
from hypothesis import strategies as st

from heavenly.diffpoly import DiffPoly
from heavenly.jetspace import Chart, multi_indices


def chart_symbols(chart: Chart, jet_order: int = 2) -> list[tuple[DiffPoly, bool]]:
    """(symbol, may_invert) pairs available on ``chart``."""
    out = [(chart.coord(c), True) for c in chart.coords]
    out += [(chart.param(p), True) for p in chart.params]
    for dep in chart.dependents:
        for idx in multi_indices(len(chart.coords), jet_order):
            out.append((DiffPoly.from_sym(chart.jet_sym(dep, idx)), False))
    for f, deps in chart.functions.items():
        for idx in multi_indices(len(deps), jet_order):
            out.append((DiffPoly.from_sym(chart.jet_sym(f, idx)), False))
    return out


rationals = st.builds(lambda n, d: mpq(n, d), st.integers(-20, 20), st.integers(1, 12))


@st.composite
def diffpolys(draw, chart: Chart, max_terms: int = 4, max_factors: int = 3, laurent: bool = True):
    syms = chart_symbols(chart)
    p = DiffPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        term = DiffPoly.const(draw(rationals))
        for _ in range(draw(st.integers(0, max_factors))):
            sym, invertible = syms[draw(st.integers(0, len(syms) - 1))]
            lo = -2 if (invertible and laurent) else 1
            exp = draw(st.integers(lo, 3).filter(lambda e: e != 0))
            term = term * sym ** exp
        p = p + term
    return p


def random_diffpoly(rng: random.Random, chart: Chart, max_terms: int = 5, max_factors: int = 3) -> DiffPoly:
    syms = chart_symbols(chart)
    p = DiffPoly()
    for _ in range(rng.randint(1, max_terms)):
        term = DiffPoly.const(mpq(rng.randint(-20, 20), rng.randint(1, 12)))
        for _ in range(rng.randint(0, max_factors)):
            sym, invertible = rng.choice(syms)
            exp = rng.choice([-2, -1, 1, 2, 3] if invertible else [1, 2, 3])
            term = term * sym ** exp
        p = p + term
    return p
