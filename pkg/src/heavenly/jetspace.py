"""Charts, total derivatives, point vector fields and their prolongations."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Mapping

from .diffpoly import COORD, FJET, PARAM, UJET, DiffPoly, Sym, derivation
from .errors import DeclarationError, ProlongationError

__all__ = [
    "Chart", "VectorField", "ProlongedField",
    "total_derivative", "prolong", "apply", "lie_bracket", "multi_indices",
]


@dataclass(frozen=True)
class Chart:
    """A jet-space context.

    ``functions`` maps each formal-function name to its ordered dependency
    coordinates; multi-indexes of UJets and FJets follow ``coords`` and the
    dependency order respectively.
    """

    name: str
    coords: tuple
    dependents: tuple = ("u",)
    functions: Mapping = field(default_factory=dict)
    params: tuple = ()

    def __post_init__(self):
        names = list(self.coords) + list(self.dependents) + list(self.functions) + list(self.params)
        if len(set(names)) != len(names):
            raise DeclarationError(f"chart {self.name}: duplicate names")
        for f, deps in self.functions.items():
            if not set(deps) <= set(self.coords):
                raise DeclarationError(f"chart {self.name}: {f} depends on undeclared coordinates")

    def __hash__(self):
        return hash((self.name, self.coords, self.dependents))

    def __eq__(self, other):
        return isinstance(other, Chart) and (
            self.name, self.coords, self.dependents, dict(self.functions), self.params
        ) == (other.name, other.coords, other.dependents, dict(other.functions), other.params)

    # symbol factories
    def coord(self, name: str) -> DiffPoly:
        if name not in self.coords:
            raise DeclarationError(f"chart {self.name}: unknown coordinate {name!r}")
        return DiffPoly.coord(name)

    def param(self, name: str) -> DiffPoly:
        if name not in self.params:
            raise DeclarationError(f"chart {self.name}: unknown parameter {name!r}")
        return DiffPoly.param(name)

    def jet_sym(self, name: str, index) -> Sym:
        index = tuple(index)
        if name in self.dependents:
            coords = self.coords
            tag = UJET
        elif name in self.functions:
            coords = tuple(self.functions[name])
            tag = FJET
        else:
            raise DeclarationError(f"chart {self.name}: unknown function {name!r}")
        if len(index) != len(coords) or any(i < 0 for i in index):
            raise DeclarationError(
                f"chart {self.name}: {name} expects {len(coords)} non-negative indices, got {list(index)}")
        return Sym(tag, name, index, coords)

    def jet(self, name: str, *derivs: str, index=None) -> DiffPoly:
        """``chart.jet('u', 't', 'y')`` is u_ty; ``index=`` gives it directly."""
        coords = self.coords if name in self.dependents else tuple(self.functions.get(name, ()))
        if index is None:
            idx = [0] * len(coords)
            for d in derivs:
                if d not in coords:
                    raise DeclarationError(f"{name} does not depend on {d!r}")
                idx[coords.index(d)] += 1
            index = idx
        return DiffPoly.from_sym(self.jet_sym(name, index))

    def u(self, *derivs: str) -> DiffPoly:
        return self.jet(self.dependents[0], *derivs)

    def f(self, name: str, *derivs: str) -> DiffPoly:
        return self.jet(name, *derivs)

    def ujet_syms(self, order: int, dependent: str | None = None) -> list[Sym]:
        dep = dependent or self.dependents[0]
        return [Sym(UJET, dep, idx, self.coords) for idx in multi_indices(len(self.coords), order)]

    def owns(self, sym: Sym) -> bool:
        if sym.tag == COORD:
            return sym.name in self.coords
        if sym.tag == PARAM:
            return sym.name in self.params
        if sym.tag == UJET:
            return sym.name in self.dependents and sym.coords == self.coords
        return sym.name in self.functions and sym.coords == tuple(self.functions[sym.name])


def multi_indices(n: int, max_order: int, min_order: int = 0) -> list[tuple]:
    """All multi-indexes of length ``n`` with ``min_order <= |sigma| <= max_order``,
    ordered by total order then lexicographically (descending)."""
    out = []
    for k in range(min_order, max_order + 1):
        level = []
        for combo in combinations_with_replacement(range(n), k):
            idx = [0] * n
            for c in combo:
                idx[c] += 1
            level.append(tuple(idx))
        out.extend(sorted(level, reverse=True))
    return out


def total_derivative(p: DiffPoly, c: str, chart: Chart | None = None) -> DiffPoly:
    """D_c = d/dc + sum u_{sigma+1_c} d/du_sigma, with FJet promotion."""
    if chart is not None and c not in chart.coords:
        raise DeclarationError(f"unknown coordinate {c!r}")
    one = DiffPoly.const(1)

    def image(sym: Sym):
        if sym.tag == COORD:
            return one if sym.name == c else None
        if sym.tag == UJET:
            if c not in sym.coords:
                raise DeclarationError(f"unknown coordinate {c!r}")
            return DiffPoly.from_sym(sym.shifted(c))
        if sym.tag == FJET and c in sym.coords:
            return DiffPoly.from_sym(sym.shifted(c))
        return None

    return derivation(p, image)


class VectorField:
    """A derivation ``sum coeff[s] * d/ds`` over base coordinates and 0-jets."""

    __slots__ = ("chart", "coeffs")

    def __init__(self, chart: Chart, coeffs: Mapping[str, object] | None = None):
        self.chart = chart
        clean = {}
        for k, v in (coeffs or {}).items():
            if k not in chart.coords and k not in chart.dependents:
                raise DeclarationError(f"chart {chart.name}: no direction {k!r}")
            v = DiffPoly._coerce(v)
            if v:
                clean[k] = v
        self.coeffs = clean

    def coeff(self, name: str) -> DiffPoly:
        return self.coeffs.get(name, DiffPoly())

    @property
    def directions(self) -> tuple:
        return self.chart.coords + self.chart.dependents

    def is_point_field(self) -> bool:
        for v in self.coeffs.values():
            for s in v.symbols():
                if s.tag == UJET and s.order > 0:
                    return False
        return True

    def _image(self, sym: Sym):
        if sym.tag == COORD:
            return self.coeffs.get(sym.name)
        if sym.tag == PARAM:
            return None
        if sym.tag == UJET:
            if sym.order == 0:
                return self.coeffs.get(sym.name)
            raise ProlongationError(f"unprolonged field applied to jet {sym.text()}")
        # formal functions of base coordinates: chain rule through their deps
        acc = DiffPoly()
        for c in sym.coords:
            xi = self.coeffs.get(c)
            if xi:
                acc = acc + xi * DiffPoly.from_sym(sym.shifted(c))
        return acc

    def __call__(self, p: DiffPoly) -> DiffPoly:
        return derivation(DiffPoly._coerce(p), self._image)

    def __add__(self, other: "VectorField") -> "VectorField":
        _same_chart(self, other)
        keys = set(self.coeffs) | set(other.coeffs)
        return VectorField(self.chart, {k: self.coeff(k) + other.coeff(k) for k in keys})

    def __neg__(self):
        return VectorField(self.chart, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        """Scale by a rational or a DiffPoly function."""
        return VectorField(self.chart, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.chart == other.chart and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.chart, frozenset(self.coeffs.items())))

    def __repr__(self):
        body = " + ".join(f"({v})*d_{k}" for k, v in self._ordered())
        return f"VectorField[{self.chart.name}]({body or '0'})"

    def _ordered(self):
        return [(k, self.coeffs[k]) for k in self.directions if k in self.coeffs]

    def to_json(self) -> dict:
        return {"chart": self.chart.name, "coefficients": {k: str(v) for k, v in self._ordered()}}


def _same_chart(X, Y):
    if X.chart != Y.chart:
        raise DeclarationError(f"chart mismatch: {X.chart.name} vs {Y.chart.name}")


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """[X, Y]^s = X(Y^s) - Y(X^s)."""
    _same_chart(X, Y)
    out = {}
    for s in X.directions:
        xs, ys = X.coeff(s), Y.coeff(s)
        out[s] = X(ys) - Y(xs)
    return VectorField(X.chart, out)


class ProlongedField:
    """A point field lifted to UJets of order ``<= order``."""

    def __init__(self, field: VectorField, order: int, jets: Mapping[tuple, DiffPoly]):
        self.field = field
        self.order = order
        self.jets = dict(jets)

    @property
    def chart(self) -> Chart:
        return self.field.chart

    def coeff(self, index) -> DiffPoly:
        index = tuple(index)
        if sum(index) > self.order:
            raise ProlongationError(f"order {sum(index)} exceeds prolongation order {self.order}")
        return self.jets[index]

    def _image(self, sym: Sym):
        if sym.tag == UJET:
            if sym.name != self.chart.dependents[0]:
                raise ProlongationError(f"unknown dependent {sym.name}")
            if sym.order > self.order:
                raise ProlongationError(
                    f"jet {sym.text()} exceeds prolongation order {self.order}")
            return self.jets[sym.index]
        return self.field._image(sym)

    def __call__(self, p: DiffPoly) -> DiffPoly:
        return derivation(DiffPoly._coerce(p), self._image)

    def restrict(self, order: int) -> "ProlongedField":
        return ProlongedField(self.field, order,
                              {k: v for k, v in self.jets.items() if sum(k) <= order})


def prolong(X: VectorField, k: int) -> ProlongedField:
    """Prolong a point field by phi^{s+1_i} = D_i phi^s - sum_j D_i(xi^j) u_{s+1_j}."""
    chart = X.chart
    if len(chart.dependents) != 1:
        raise ProlongationError("prolongation needs exactly one dependent variable")
    if not X.is_point_field():
        raise ProlongationError("only point fields can be prolonged")
    coords = chart.coords
    n = len(coords)
    dep = chart.dependents[0]
    zero = (0,) * n
    jets = {zero: X.coeff(dep)}
    dxi = {}
    for i, ci in enumerate(coords):
        for j, cj in enumerate(coords):
            xi = X.coeff(cj)
            if xi:
                d = total_derivative(xi, ci)
                if d:
                    dxi[i, j] = d
    for idx in multi_indices(n, k, 1):
        i = next(a for a in range(n) if idx[a])
        parent = list(idx)
        parent[i] -= 1
        phi = total_derivative(jets[tuple(parent)], coords[i])
        for j in range(n):
            d = dxi.get((i, j))
            if d is not None:
                shifted = list(parent)
                shifted[j] += 1
                phi = phi - d * DiffPoly.ujet(dep, shifted, coords)
        jets[idx] = phi
    return ProlongedField(X, k, jets)


def apply(X: ProlongedField, p: DiffPoly) -> DiffPoly:
    return X(p)
