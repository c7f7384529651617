"""Identity checks: exact symbolic residual plus seeded random-point cross-evaluation."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from gmpy2 import mpq

from .diffpoly import DiffPoly, Sym, evaluate, sym_of

__all__ = ["CheckResult", "random_point", "identity_check", "field_pairs", "rand_rational"]

PASS, FAIL, SKIP = "pass", "fail", "skip"
_MAX_RESIDUAL_CHARS = 4000


@dataclass
class CheckResult:
    name: str
    anchor: str = ""
    status: str = PASS
    witness: dict | None = None
    ms: float = 0.0
    residual: DiffPoly | None = field(default=None, repr=False)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "status": self.status,
                "witness": self.witness, "ms": round(self.ms, 3)}


def _negative_syms(polys: Iterable[DiffPoly]) -> set[Sym]:
    out = set()
    for p in polys:
        for mono in p.terms:
            for s, e in mono:
                if e < 0:
                    out.add(sym_of(s))
    return out


def rand_rational(rng: random.Random, nonzero: bool) -> mpq:
    while True:
        num = rng.randint(-9, 9)
        if num or not nonzero:
            return mpq(num, rng.randint(1, 9))


def random_point(polys: Sequence[DiffPoly], rng: random.Random,
                 nonzero: Iterable[Sym] = ()) -> dict[Sym, mpq]:
    """Seeded rational assignment of every symbol in ``polys``.

    Symbols carried with a negative exponent (and any in ``nonzero``) avoid 0.
    Symbols are visited in canonical order so the draw is reproducible.
    """
    syms = set()
    for p in polys:
        syms |= p.symbols()
    forbid = _negative_syms(polys) | set(nonzero)
    return {s: rand_rational(rng, s in forbid) for s in sorted(syms, key=lambda s: s.key)}


def point_text(pt: dict[Sym, mpq]) -> dict[str, str]:
    return {s.text(): str(v) for s, v in sorted(pt.items(), key=lambda kv: kv[0].key)}


def _clip(text: str) -> str:
    if len(text) <= _MAX_RESIDUAL_CHARS:
        return text
    return text[:_MAX_RESIDUAL_CHARS] + f" ... [{len(text)} chars]"


def identity_check(name: str, pairs: Sequence[tuple[object, object]], *, anchor: str = "",
                   rng: random.Random | None = None, points: int = 20) -> CheckResult:
    """Check ``lhs == rhs`` for every pair, exactly and at ``points`` random points.

    Both sides are evaluated separately at each point, so the numeric check
    does not go through the symbolic subtraction.
    """
    rng = rng or random.Random(0)
    start = time.perf_counter()
    pairs = [(DiffPoly._coerce(l), DiffPoly._coerce(r)) for l, r in pairs]
    residuals = [l - r for l, r in pairs]
    total = DiffPoly()
    for res in residuals:
        total = total + res
    symbolic_ok = all(not r for r in residuals)
    numeric_ok = True
    witness = None
    everything = [p for pair in pairs for p in pair]
    for _ in range(points):
        pt = random_point(everything, rng)
        bad = next((k for k, (l, r) in enumerate(pairs) if evaluate(l, pt) != evaluate(r, pt)), None)
        if bad is not None:
            numeric_ok = False
            if witness is None:
                witness = {"point": point_text(pt), "component": bad,
                           "residual": _clip(str(residuals[bad]))}
    status = PASS if symbolic_ok and numeric_ok else FAIL
    if status == FAIL and witness is None:
        k = next(k for k, r in enumerate(residuals) if r)
        witness = {"point": None, "component": k, "residual": _clip(str(residuals[k]))}
        for _ in range(50):
            pt = random_point([residuals[k]], rng)
            if evaluate(residuals[k], pt):
                witness["point"] = point_text(pt)
                break
    if symbolic_ok and not numeric_ok:
        witness["note"] = "canonical form zero but point evaluation differs"
    return CheckResult(name=name, anchor=anchor, status=status, witness=witness,
                       ms=(time.perf_counter() - start) * 1000.0,
                       residual=None if symbolic_ok else total)


def field_pairs(X, Y) -> list[tuple[DiffPoly, DiffPoly]]:
    """Component pairs for an equality of two vector fields on one chart."""
    if X.chart != Y.chart:
        raise ValueError("chart mismatch")
    return [(X.coeff(s), Y.coeff(s)) for s in X.directions]
