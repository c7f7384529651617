"""Poisson structures, Hamiltonian fields, the truncated total field and
generic cocycle / bracket-table verification for graded generator families."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .checks import CheckResult, field_pairs, identity_check
from .diffpoly import FJET, DiffPoly, collect, pdiff
from .errors import DeclarationError
from .jetspace import Chart, VectorField, lie_bracket

__all__ = [
    "PoissonStructure", "poisson", "ham_field", "nabla",
    "LinearOperator", "GeneratorFamily",
    "check_cocycle", "check_bracket_table", "graded_table",
]


@dataclass(frozen=True)
class PoissonStructure:
    """Sum of ``dq ^ dp`` over ``pairs``.  Fixed convention: ``i_X w = dH``,
    hence ``X_H = sum H_p d_q - H_q d_p`` and ``{A, B} = X_A(B)``."""

    name: str
    chart: Chart
    pairs: tuple

    def check_symbols(self, *polys: DiffPoly):
        for p in polys:
            for s in p.symbols():
                if not self.chart.owns(s):
                    raise DeclarationError(f"{s.text()} is not a symbol of chart {self.chart.name}")


def poisson(A: DiffPoly, B: DiffPoly, s: PoissonStructure) -> DiffPoly:
    A, B = DiffPoly._coerce(A), DiffPoly._coerce(B)
    s.check_symbols(A, B)
    out = DiffPoly()
    for q, p in s.pairs:
        out = out + pdiff(A, p) * pdiff(B, q) - pdiff(A, q) * pdiff(B, p)
    return out


def ham_field(H: DiffPoly, s: PoissonStructure) -> VectorField:
    H = DiffPoly._coerce(H)
    s.check_symbols(H)
    coeffs: dict[str, DiffPoly] = {}
    for q, p in s.pairs:
        coeffs[q] = coeffs.get(q, DiffPoly()) + pdiff(H, p)
        coeffs[p] = coeffs.get(p, DiffPoly()) - pdiff(H, q)
    return VectorField(s.chart, coeffs)


def nabla(A: DiffPoly, k: int = 1) -> DiffPoly:
    """k-fold ``x d_t + y d_z`` on chart TM (x and y are inert)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    x, y = DiffPoly.coord("x"), DiffPoly.coord("y")
    A = DiffPoly._coerce(A)
    for _ in range(k):
        A = x * pdiff(A, "t") + y * pdiff(A, "z")
    return A


@dataclass(frozen=True)
class LinearOperator:
    """``f -> sum coeff * d^index f`` with multi-indexes over ``coords``."""

    coords: tuple
    terms: tuple = ()

    def __call__(self, f) -> DiffPoly:
        f = DiffPoly._coerce(f)
        out = DiffPoly()
        for index, coeff in self.terms:
            g = f
            for c, n in zip(self.coords, index):
                for _ in range(n):
                    g = pdiff(g, c)
            out = out + coeff * g
        return out

    @classmethod
    def from_expression(cls, expr: DiffPoly, fname: str, deps: Sequence[str]) -> "LinearOperator":
        """Read the operator off an expression linear in the jets of ``fname``."""
        terms = []
        for key, value in collect(expr, lambda s: s.tag == FJET and s.name == fname).items():
            syms = key.symbols()
            if not syms:
                if value:
                    raise DeclarationError(f"expression is not linear in {fname}")
                continue
            (mono, _), = key.items()
            (sym, e), = mono.items()
            if e != 1 or tuple(sym.coords) != tuple(deps):
                raise DeclarationError(f"expression is not linear in {fname}")
            terms.append((sym.index, value))
        terms.sort(key=lambda t: (sum(t[0]), t[0]))
        return cls(tuple(deps), tuple(terms))

    def __add__(self, other):
        if self.coords != other.coords:
            raise DeclarationError("operators over different coordinates")
        acc: dict = {}
        for idx, c in self.terms + other.terms:
            acc[idx] = acc.get(idx, DiffPoly()) + c
        return LinearOperator(self.coords, tuple(sorted(((i, c) for i, c in acc.items() if c),
                                                        key=lambda t: (sum(t[0]), t[0]))))

    def __mul__(self, c):
        return LinearOperator(self.coords, tuple((i, v * c) for i, v in self.terms if v * c))

    __rmul__ = __mul__


@dataclass
class GeneratorFamily:
    """Graded family ``(i, f) -> field``; brackets above ``cutoff`` vanish."""

    name: str
    chart: Chart
    gradings: tuple
    build: Callable[[int, DiffPoly], VectorField]
    cutoff: int | None = None
    extras: Mapping[str, VectorField] = field(default_factory=dict)

    def generator(self, i: int, f) -> VectorField:
        if i not in self.gradings or (self.cutoff is not None and i > self.cutoff):
            return VectorField(self.chart)
        return self.build(i, DiffPoly._coerce(f))

    def __call__(self, i: int, f) -> VectorField:
        return self.generator(i, f)


def _graded(psi) -> Mapping[int, Callable]:
    if isinstance(psi, Mapping):
        return psi
    return {0: psi}


def check_cocycle(psi, act: Callable[[int, DiffPoly], VectorField], bracket: PoissonStructure,
                  A: DiffPoly, B: DiffPoly, *, gradings: Sequence[int] = (0,),
                  cutoff: int | None = None, name: str = "cocycle", anchor: str = "",
                  rng: random.Random | None = None, points: int = 20) -> CheckResult:
    """Verify ``act(i,A)(psi_j(B)) - act(j,B)(psi_i(A)) = psi_{i+j}({A,B})`` for all
    grading pairs.  ``psi`` is an operator or a map grading -> operator; components
    not listed are zero, as is the right-hand side above ``cutoff``."""
    comps = _graded(psi)
    AB = poisson(A, B, bracket)
    zero = DiffPoly()
    pairs = []
    for i in gradings:
        for j in gradings:
            psi_i, psi_j = comps.get(i), comps.get(j)
            lhs = zero
            if psi_j is not None:
                lhs = lhs + act(i, A)(psi_j(B))
            if psi_i is not None:
                lhs = lhs - act(j, B)(psi_i(A))
            k = i + j
            rhs = zero
            if (cutoff is None or k <= cutoff) and comps.get(k) is not None:
                rhs = comps[k](AB)
            pairs.append((lhs, rhs))
    return identity_check(name, pairs, anchor=anchor, rng=rng, points=points)


def graded_table(family: GeneratorFamily, bracket: PoissonStructure) -> dict:
    """Expected table ``[F_i(A), F_j(B)] = F_{i+j}({A, B})`` (zero above the cutoff)."""
    table = {}
    for i in family.gradings:
        for j in family.gradings:
            table[i, j] = (lambda A, B, k=i + j: family.generator(k, poisson(A, B, bracket)))
    return table


def check_bracket_table(family: GeneratorFamily, expected: Mapping, A: DiffPoly, B: DiffPoly, *,
                        anchor: str = "", rng: random.Random | None = None,
                        points: int = 20) -> list[CheckResult]:
    """One check per ``(i, j)`` entry: ``[F_i(A), F_j(B)] == expected[i, j](A, B)``.
    A ``None`` expectation means the bracket must vanish."""
    results = []
    for (i, j), rhs in expected.items():
        if i not in family.gradings or j not in family.gradings:
            raise DeclarationError(f"grading ({i},{j}) outside family {family.name}")
        lhs = lie_bracket(family.generator(i, A), family.generator(j, B))
        target = VectorField(family.chart) if rhs is None else rhs(A, B)
        results.append(identity_check(f"{family.name}[{i},{j}]", field_pairs(lhs, target),
                                      anchor=anchor, rng=rng, points=points))
    return results
