"""Charts, Poisson structures, operators, invariants and generator families."""

from __future__ import annotations

from functools import lru_cache

from ..diffpoly import DiffPoly, pdiff
from ..jetspace import Chart, VectorField, total_derivative
from ..liealg import GeneratorFamily, LinearOperator, PoissonStructure, ham_field, nabla
from ..linalg import pfaffian

# -- charts ------------------------------------------------------------------

_TZ = ("t", "z")
M = Chart("M", _TZ, ("u",), {"A": _TZ, "B": _TZ, "C": _TZ, "q": _TZ})
TM = Chart("TM", ("t", "z", "x", "y"), ("u",),
           {"A": _TZ, "B": _TZ, "C": _TZ, "q": _TZ}, ("c1", "c2", "c3", "c4"))
PBI = Chart("PbI", ("t", "x", "y", "z"), ("u",),
            {"A": ("t", "y"), "Abar": ("t", "y"), "C": ("t", "y"),
             "B": ("x", "z"), "Bbar": ("x", "z"), "D": ("x", "z")})
SIXD_COORDS = ("x1", "p1", "x2", "p2", "x3", "p3")
SIXD = Chart("6D", SIXD_COORDS, ("u",),
             {f"{f}{i}": (f"x{i}", f"p{i}") for i in (1, 2, 3) for f in ("A", "B")})

CHARTS = {c.name: c for c in (M, TM, PBI, SIXD)}

OMEGA_M = PoissonStructure("Omega_M", M, (("t", "z"),))
OMEGA_TM = PoissonStructure("Omega_TM", TM, (("x", "z"), ("t", "y")))
PRODUCT_PBI = PoissonStructure("Product_PbI", PBI, (("t", "y"), ("x", "z")))
SIXD_FORM = PoissonStructure("SixD", SIXD, tuple((f"x{i}", f"p{i}") for i in (1, 2, 3)))

STRUCTURES = {s.name: s for s in (OMEGA_M, OMEGA_TM, PRODUCT_PBI, SIXD_FORM)}

# -- operators on functions of (t, z) -----------------------------------------

_A = TM.f("A")
t, z, x, y = (DiffPoly.coord(c) for c in ("t", "z", "x", "y"))


def _op(expr: DiffPoly) -> LinearOperator:
    return LinearOperator.from_expression(expr, "A", _TZ)


ZETA1 = _op(t * TM.f("A", "t") + z * TM.f("A", "z") - 2 * _A)
ZETA2 = _op(_A)
NABLA = {k: _op(nabla(_A, k)) for k in (1, 2, 3)}
LAURENT = _op(y ** -2 * TM.f("A", "t", "t") + x ** -2 * TM.f("A", "z", "z"))

# Graded cocycles on H_infinity: grading -> operator.
SCRIPT_ZETA1 = {0: NABLA[3] * DiffPoly.const("1/6"), 1: NABLA[2] * DiffPoly.const("1/2"),
                2: NABLA[1], 3: ZETA2}
SCRIPT_ZETA2 = {1: NABLA[1], 2: ZETA2 * 2}
GRADED_ZETA1 = {0: ZETA1}
GRADED_ZETA2 = {1: ZETA2}

# -- invariants ----------------------------------------------------------------

u = TM.u
I1 = u("t", "y") - u("x", "z") + u("x", "x") * u("y", "y") - u("x", "y") ** 2
I2 = ((u("y") - x) ** 2 * u("x", "x") - 2 * (u("x") + y) * (u("y") - x) * u("x", "y")
      + (u("x") + y) ** 2 * u("y", "y"))
I3 = u("x", "x") * u("y", "y") - u("x", "y") ** 2
I4 = u("y") ** 2 * u("x", "x") - 2 * u("x") * u("y") * u("x", "y") + u("x") ** 2 * u("y", "y")

# E-labels: E1 = D_t, E2 = D_x, E3 = D_y, E4 = D_z (not chart order).
E_COORDS = ("t", "x", "y", "z")
E = tuple(total_derivative(I1, c, TM) for c in E_COORDS)


def j1_from(e) -> DiffPoly:
    e1, e2, e3, e4 = e
    return (e2 * e4 - e1 * e3 - u("x", "x") * e3 ** 2
            + 2 * u("x", "y") * e2 * e3 - u("y", "y") * e2 ** 2)


J1 = j1_from(E)

PBI_LHS = (PBI.u("t", "x") * PBI.u("y", "z") - PBI.u("t", "z") * PBI.u("x", "y"))


def hessian_block(i: int, j: int) -> list[list[DiffPoly]]:
    xi, pi, xj, pj = f"x{i}", f"p{i}", f"x{j}", f"p{j}"
    return [[SIXD.u(xi, xj), SIXD.u(xi, pj)], [SIXD.u(pi, xj), SIXD.u(pi, pj)]]


def pf6d_matrix() -> list[list[DiffPoly]]:
    """The 6x6 antisymmetric matrix [[0, H12, H13], [-H12^T, 0, H23], [-H13^T, -H23^T, 0]]."""
    m = [[DiffPoly() for _ in range(6)] for _ in range(6)]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            block = hessian_block(min(i, j), max(i, j))
            for a in range(2):
                for b in range(2):
                    if i < j:
                        m[2 * i - 2 + a][2 * j - 2 + b] = block[a][b]
                    else:
                        m[2 * i - 2 + a][2 * j - 2 + b] = -block[b][a]
    return m


@lru_cache(maxsize=None)
def pf6d() -> DiffPoly:
    return pfaffian(pf6d_matrix())


INVARIANTS = {"I1": I1, "I2": I2, "I3": I3, "I4": I4, "J1": J1,
              "E1": E[0], "E2": E[1], "E3": E[2], "E4": E[3], "PbI_lhs": PBI_LHS}

# -- generator families --------------------------------------------------------


def _vertical(chart: Chart, f: DiffPoly) -> VectorField:
    return VectorField(chart, {"u": f})


def V0(A: DiffPoly) -> VectorField:
    return ham_field(nabla(A), OMEGA_TM)


def V1(A: DiffPoly) -> VectorField:
    return ham_field(A, OMEGA_TM)


V_FAMILY = GeneratorFamily("V", TM, (0, 1), lambda i, A: V0(A) if i == 0 else V1(A), cutoff=1)


def _c(value) -> DiffPoly:
    return TM.param(value) if isinstance(value, str) else DiffPoly._coerce(value)


def vhat_family(c1=None, c2=None, c3=None, c4=None, name: str | None = None) -> GeneratorFamily:
    """The extension V-hat with constants c1..c4 (symbolic by default)."""
    c1, c2, c3, c4 = (_c(v if v is not None else f"c{k}")
                      for k, v in enumerate((c1, c2, c3, c4), start=1))

    def build(i: int, A: DiffPoly) -> VectorField:
        if i == 0:
            return V0(A) + _vertical(TM, c1 * nabla(A, 3) / 6 + c3 * ZETA1(A))
        if i == 1:
            return V1(A) + _vertical(TM, c1 * nabla(A, 2) / 2 + c2 * nabla(A) + c4 * A)
        if i == 2:
            return _vertical(TM, c1 * nabla(A) + 2 * c2 * A)
        return _vertical(TM, c1 * A)

    gradings = tuple(i for i, keep in enumerate((True, True, bool(c1 or c2), bool(c1))) if keep)
    label = name or f"Vhat({c1},{c2},{c3},{c4})"
    return GeneratorFamily(label, TM, gradings, build)


def W(i: int, A: DiffPoly) -> VectorField:
    """g_1 generators: W0 = V0 - 1/6 nabla^3 d_u, W1 = V1 - 1/2 nabla^2 d_u,
    W2 = nabla d_u, W3 = d_u multiples."""
    if i == 0:
        return V0(A) - _vertical(TM, nabla(A, 3) / 6)
    if i == 1:
        return V1(A) - _vertical(TM, nabla(A, 2) / 2)
    if i == 2:
        return _vertical(TM, nabla(A))
    if i == 3:
        return _vertical(TM, A)
    return VectorField(TM)


W0_PRIME = VectorField(TM, {"t": t, "x": x, "y": y, "z": z, "u": 2 * TM.u()})
W0_DPRIME = VectorField(TM, {"x": -x, "y": -y, "u": -3 * TM.u()})
W1_PRIME = VectorField(TM, {"x": t, "y": z})

G1 = GeneratorFamily("g1", TM, (0, 1, 2, 3), W, cutoff=3,
                     extras={"W0'": W0_PRIME, "W0''": W0_DPRIME, "W1'": W1_PRIME})
G2 = vhat_family(0, 1, 0, 0, name="g2")
G3 = vhat_family(0, 0, "c3", "c4", name="g3")

# Plebanski I: two copies on M1 = (t, y) and M2 = (x, z).


def _y_family(label: str) -> GeneratorFamily:
    def build(i: int, A: DiffPoly) -> VectorField:
        return ham_field(A, PRODUCT_PBI) if i == 0 else _vertical(PBI, A)
    return GeneratorFamily(label, PBI, (0, 1), build, cutoff=1)


Y_ALPHA = _y_family("Y_alpha")
Y_BETA = _y_family("Y_beta")
_tp, _xp, _yp, _zp = (DiffPoly.coord(c) for c in ("t", "x", "y", "z"))
Y0_PRIME = VectorField(PBI, {"t": _tp, "y": -_yp})
Y0_DPRIME = VectorField(PBI, {"x": _xp, "z": -_zp})
Y0_TILDE = VectorField(PBI, {"t": _tp, "y": _yp, "x": -_xp, "z": -_zp})
PBI_EXTRAS = {"Y0'": Y0_PRIME, "Y0''": Y0_DPRIME, "Y0~": Y0_TILDE}


def mu_alpha(A: DiffPoly, sign: int) -> DiffPoly:
    """mu^alpha_(+/-)(A) = y A_y +/- t A_t."""
    return _yp * pdiff(A, "y") + sign * _tp * pdiff(A, "t")


def mu_beta(B: DiffPoly, sign: int) -> DiffPoly:
    """mu^beta_(+/-)(B) = z B_z +/- x B_x."""
    return _zp * pdiff(B, "z") + sign * _xp * pdiff(B, "x")


SIXD_FAMILY = GeneratorFamily(
    "sixd", SIXD, (0, 1),
    lambda i, A: ham_field(A, SIXD_FORM) if i == 0 else _vertical(SIXD, A), cutoff=1)

FAMILIES = {f.name: f for f in (V_FAMILY, G1, G2, G3, Y_ALPHA, Y_BETA, SIXD_FAMILY)}
