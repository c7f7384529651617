"""Invariant derivations of the g1 prolongation and their structure functions."""

from __future__ import annotations

import random
from functools import lru_cache

from gmpy2 import mpq

from ..diffpoly import DiffPoly, Sym, evaluate
from ..checks import rand_rational
from ..errors import SingularMatrixError
from ..jetspace import total_derivative
from ..linalg import det_rational, solve_exact
from .catalog import E, E_COORDS, I1, TM, u

__all__ = ["Frame", "build_frame", "FRAME", "apply_derivation", "structure_functions_at",
           "SingularFrameError", "random_jet_point", "singular_point"]


class SingularFrameError(SingularMatrixError):
    """The frame matrix is singular at the point: draw another point."""


class Frame(tuple):
    """Four derivations; each is a tuple of coefficients on (D_t, D_x, D_y, D_z)."""


def build_frame(e) -> Frame:
    e1, e2, e3, e4 = e
    uxx, uxy, uyy = u("x", "x"), u("x", "y"), u("y", "y")
    hess = uxx * uyy - uxy ** 2
    zero = DiffPoly()
    p = uyy * e2 - uxy * e3 - e4
    q = uxy * e2 - uxx * e3 - e1
    return Frame((
        (zero, e3, -e2, zero),
        (e3, e4, -e1, -e2),
        (zero, p, -q, zero),
        (p, -(uyy * e1 + hess * e3 - uxy * e4), uxy * e1 + hess * e2 - uxx * e4, -q),
    ))


FRAME = build_frame(E)
E_PLACEHOLDERS = tuple(DiffPoly.param(f"E{k}") for k in (1, 2, 3, 4))


def apply_derivation(d, p: DiffPoly) -> DiffPoly:
    """sum_a d[a] * D_a(p) over (t, x, y, z)."""
    out = DiffPoly()
    for coeff, c in zip(d, E_COORDS):
        if coeff:
            out = out + coeff * total_derivative(p, c, TM)
    return out


@lru_cache(maxsize=1)
def _coefficient_derivatives():
    """D_c of every frame coefficient, indexed [j][a][c]."""
    return [[[total_derivative(b, c, TM) for c in E_COORDS] for b in row] for row in FRAME]


def _needed_symbols() -> set[Sym]:
    syms = set()
    for row in FRAME:
        for b in row:
            syms |= b.symbols()
    for row in _coefficient_derivatives():
        for ders in row:
            for d in ders:
                syms |= d.symbols()
    return syms


def random_jet_point(rng: random.Random) -> dict[Sym, mpq]:
    """Random rational values for every symbol the structure functions need."""
    return {s: rand_rational(rng, False) for s in sorted(_needed_symbols(), key=lambda s: s.key)}


def structure_functions_at(pt: dict[Sym, mpq]) -> dict[tuple, mpq]:
    """c_ij^k at a point, from [D_i, D_j] = c_ij^k D_k.

    The commutator's coefficient on D_a is D_i(b_j^a) - D_j(b_i^a); both sides are
    evaluated at ``pt`` and the 4x4 system B^T c = w is solved exactly.  Keys run
    over ordered pairs i != j (1-based) and k.
    """
    B = [[evaluate(b, pt) for b in row] for row in FRAME]
    if not det_rational(B):
        raise SingularFrameError("frame is singular at this point; resample")
    ders = [[[evaluate(d, pt) for d in dc] for dc in row] for row in _coefficient_derivatives()]
    Bt = [[B[k][a] for k in range(4)] for a in range(4)]
    out = {}
    for i in range(4):
        for j in range(i + 1, 4):
            w = [sum(B[i][c] * ders[j][a][c] - B[j][c] * ders[i][a][c] for c in range(4))
                 for a in range(4)]
            coeffs = solve_exact(Bt, w)
            for k in range(4):
                out[i + 1, j + 1, k + 1] = coeffs[k]
                out[j + 1, i + 1, k + 1] = -coeffs[k]
    return out


def commutator_at(pt: dict[Sym, mpq], i: int, j: int) -> list[mpq]:
    """Coefficients of [D_i, D_j] on (D_t, D_x, D_y, D_z) at ``pt`` (1-based)."""
    i, j = i - 1, j - 1
    B = [[evaluate(b, pt) for b in row] for row in FRAME]
    ders = _coefficient_derivatives()
    return [sum(B[i][c] * evaluate(ders[j][a][c], pt) - B[j][c] * evaluate(ders[i][a][c], pt)
                for c in range(4)) for a in range(4)]


def frame_matrix_at(pt: dict[Sym, mpq]) -> list[list[mpq]]:
    return [[evaluate(b, pt) for b in row] for row in FRAME]


def _solve_linear_for(p: DiffPoly, target: Sym, pt: dict[Sym, mpq]) -> mpq:
    """Value of ``target`` making ``p`` vanish, for ``p`` affine in ``target``."""
    pt = dict(pt)
    pt[target] = mpq(0)
    b = evaluate(p, pt)
    pt[target] = mpq(1)
    a = evaluate(p, pt) - b
    if not a:
        raise SingularMatrixError(f"{target.text()} does not occur linearly")
    return -b / a


def singular_point(rng: random.Random) -> dict[Sym, mpq]:
    """A random point of the prolonged equation: I1 = 0 and E1 = ... = E4 = 0."""
    pt = random_jet_point(rng)
    extra = set(I1.symbols())
    for e in E:
        extra |= e.symbols()
    for s in sorted(extra - set(pt), key=lambda s: s.key):
        pt[s] = rand_rational(rng, False)

    def sym(*d):
        return TM.u(*d).symbols().pop()

    for poly, target in ((I1, sym("t", "y")), (E[1], sym("x", "x", "z")),
                         (E[2], sym("x", "y", "z")), (E[0], sym("t", "t", "y")),
                         (E[3], sym("x", "z", "z"))):
        pt[target] = _solve_linear_for(poly, target, pt)
    return pt
