"""Named verification suites.

Each suite is a list of exact identities; every identity is also evaluated at
seeded random rational points (see :func:`heavenly.checks.identity_check`).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from ..checks import FAIL, PASS, CheckResult, field_pairs, identity_check, point_text
from ..diffpoly import UJET, DiffPoly, degree_in, evaluate, substitute
from ..errors import SingularMatrixError, UnknownSuiteError
from ..jetspace import VectorField, lie_bracket, prolong
from ..liealg import GeneratorFamily, check_bracket_table, check_cocycle, graded_table, ham_field, nabla, poisson
from ..linalg import det_expansion, det_rational
from . import catalog as C
from .frame import (E_PLACEHOLDERS, FRAME, apply_derivation, build_frame, commutator_at,
                    frame_matrix_at, random_jet_point, singular_point, structure_functions_at)

__all__ = ["SUITES", "SuiteResult", "verify_suite", "suite_names"]

FRAME_POINTS = 5


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    @property
    def status(self) -> str:
        live = [c for c in self.checks if c.status != "skip"]
        return PASS if all(c.status == PASS for c in live) else FAIL

    def to_json(self) -> dict:
        return {"name": self.name, "checks": [c.to_json() for c in self.checks],
                "status": self.status}


class Ctx:
    def __init__(self, name: str, seed: int, points: int):
        self.rng = random.Random(f"{seed}:{name}")
        self.points = points
        self.checks: list[CheckResult] = []

    def identity(self, name: str, pairs, anchor: str) -> CheckResult:
        res = identity_check(name, pairs, anchor=anchor, rng=self.rng, points=self.points)
        self.checks.append(res)
        return res

    def fields(self, name: str, X: VectorField, Y: VectorField, anchor: str) -> CheckResult:
        return self.identity(name, field_pairs(X, Y), anchor)

    def vanishes(self, name: str, p: DiffPoly, anchor: str) -> CheckResult:
        return self.identity(name, [(p, 0)], anchor)

    def add(self, results):
        self.checks.extend(results)


def _act(family: GeneratorFamily):
    return lambda i, f: family.generator(i, f)


def _zero(chart) -> VectorField:
    return VectorField(chart)


A_M, B_M, C_M = C.M.f("A"), C.M.f("B"), C.M.f("C")
A, B, Cf, q = C.TM.f("A"), C.TM.f("B"), C.TM.f("C"), C.TM.f("q")


# -- Poisson algebra cocycle and the contact extension ---------------------------

def suite_thm1(ctx: Ctx):
    anchor = "zeta1(A) = tA_t + zA_z - 2A is a 1-cocycle of the Poisson algebra"
    adjoint = lambda i, f: ham_field(f, C.OMEGA_M)  # noqa: E731
    ctx.checks.append(check_cocycle(C.ZETA1, adjoint, C.OMEGA_M, A_M, B_M, name="zeta1-cocycle",
                                    anchor=anchor, rng=ctx.rng, points=ctx.points))

    def ext(h):
        return ham_field(h, C.OMEGA_M) + VectorField(C.M, {"u": C.ZETA1(h)})

    ctx.fields("contact-extension-homomorphism", lie_bracket(ext(A_M), ext(B_M)),
               ext(poisson(A_M, B_M, C.OMEGA_M)),
               "X_h + zeta1(h) d_u is a Lie algebra homomorphism")
    t, z = C.M.coord("t"), C.M.coord("z")
    ht, hz = C.M.f("A", "t"), C.M.f("A", "z")
    contact = (VectorField(C.M, {"t": hz, "z": -ht, "u": hz * z + ht * t})
               + VectorField(C.M, {"u": -2 * A_M}))
    ctx.fields("contact-extension-form", ext(A_M), contact,
               "extended field equals h_z(d_t + z d_u) - h_t(d_z - t d_u) - 2h d_u")


# -- the truncated total field --------------------------------------------------

def suite_prop2(ctx: Ctx):
    anchor = "nabla + {q, .} intertwines the brackets of M and TM"
    for label, qq in (("nabla", DiffPoly()), ("nabla+{q,.}", q)):
        def tilde(f, qq=qq):
            return nabla(f) + (poisson(qq, f, C.OMEGA_M) if qq else DiffPoly())
        lhs = tilde(poisson(A, B, C.OMEGA_M))
        rhs = poisson(tilde(A), tilde(B), C.OMEGA_TM)
        ctx.identity(f"{label} bracket identity", [(lhs, rhs)], anchor)
    ctx.identity("nabla is a derivation", [(nabla(A * B), nabla(A) * B + A * nabla(B))],
                 "nabla obeys the Leibniz rule")


def suite_prop3(ctx: Ctx):
    x, y = C.TM.coord("x"), C.TM.coord("y")
    V0_explicit = VectorField(C.TM, {
        "t": C.TM.f("A", "z"), "z": -C.TM.f("A", "t"),
        "x": C.TM.f("A", "t", "z") * x + C.TM.f("A", "z", "z") * y,
        "y": -(C.TM.f("A", "t", "t") * x + C.TM.f("A", "t", "z") * y)})
    V1_explicit = VectorField(C.TM, {"x": C.TM.f("A", "z"), "y": -C.TM.f("A", "t")})
    ctx.fields("V0 = X_(nabla A)", ham_field(nabla(A), C.OMEGA_TM), V0_explicit,
               "Hamiltonian field of nabla A equals the explicit V0")
    ctx.fields("V1 = X_A", ham_field(A, C.OMEGA_TM), V1_explicit,
               "Hamiltonian field of A lifted to TM equals the explicit V1")
    hom = "[X_A, X_B] = X_{A,B}"
    ctx.fields("hamiltonian homomorphism Omega_M", lie_bracket(ham_field(A_M, C.OMEGA_M), ham_field(B_M, C.OMEGA_M)),
               ham_field(poisson(A_M, B_M, C.OMEGA_M), C.OMEGA_M), hom)
    HA = A + x * B + y ** 2 * Cf
    HB = B * x * y + A
    ctx.fields("hamiltonian homomorphism Omega_TM", lie_bracket(ham_field(HA, C.OMEGA_TM), ham_field(HB, C.OMEGA_TM)),
               ham_field(poisson(HA, HB, C.OMEGA_TM), C.OMEGA_TM), hom)
    PA = C.PBI.f("A") + C.PBI.f("B")
    PB = C.PBI.f("Abar") * C.PBI.f("Bbar") + C.PBI.f("D")
    ctx.fields("hamiltonian homomorphism Product_PbI",
               lie_bracket(ham_field(PA, C.PRODUCT_PBI), ham_field(PB, C.PRODUCT_PBI)),
               ham_field(poisson(PA, PB, C.PRODUCT_PBI), C.PRODUCT_PBI), hom)
    ctx.fields("[V1(A), V1(B)] = 0", lie_bracket(C.V1(A), C.V1(B)), _zero(C.TM),
               "grading-one fields commute, so V vanishes above grading one")
    ctx.add(check_bracket_table(C.V_FAMILY, graded_table(C.V_FAMILY, C.OMEGA_M), A, B,
                                anchor="V: H_1 -> D_1 is a graded homomorphism",
                                rng=ctx.rng, points=ctx.points))


# -- cohomology representatives --------------------------------------------------

def suite_thm2(ctx: Ctx):
    act = lambda i, f: C.V0(f)  # noqa: E731
    for name, psi, anchor in (
            ("zeta1", C.ZETA1, "zeta1 is a V0-cocycle with values in C(TM)"),
            ("zeta_GF = nabla^3", C.NABLA[3], "nabla^3 is a V0-cocycle with values in C(TM)"),
            ("laurent y^-2 A_tt + x^-2 A_zz", C.LAURENT,
             "the excluded singular solution satisfies the cocycle identity")):
        ctx.checks.append(check_cocycle(psi, act, C.OMEGA_M, A, B, name=f"{name} cocycle",
                                        anchor=anchor, rng=ctx.rng, points=ctx.points))
    F = _random_tm_polynomial(ctx.rng)
    coboundary = lambda f: C.V0(f)(F)  # noqa: E731
    res = check_cocycle(coboundary, act, C.OMEGA_M, A, B, name="coboundary V0(A)(F)",
                        anchor="V0(A) applied to dF is a cocycle (coboundary)",
                        rng=ctx.rng, points=ctx.points)
    res.info["F"] = str(F)
    ctx.checks.append(res)


def _random_tm_polynomial(rng: random.Random, degree: int = 3, terms: int = 6) -> DiffPoly:
    coords = [C.TM.coord(c) for c in C.TM.coords]
    out = DiffPoly()
    for _ in range(terms):
        mono = DiffPoly.const(rng.randint(-5, 5) or 1)
        for _ in range(rng.randint(0, degree)):
            mono = mono * rng.choice(coords)
        out = out + mono
    return out


def suite_thm3(ctx: Ctx):
    for name, psi in (("zeta1", C.GRADED_ZETA1), ("zeta2", C.GRADED_ZETA2)):
        ctx.checks.append(check_cocycle(
            psi, _act(C.V_FAMILY), C.OMEGA_M, A, B, gradings=(0, 1), cutoff=1,
            name=f"{name} on H_1", anchor="zeta1 and zeta2 are cocycles of the truncated algebra H_1",
            rng=ctx.rng, points=ctx.points))


def suite_thm3x(ctx: Ctx):
    gradings = (0, 1, 2, 3, 4)
    for name, psi in (("script-zeta1", C.SCRIPT_ZETA1), ("script-zeta2", C.SCRIPT_ZETA2),
                      ("zeta1", C.GRADED_ZETA1), ("zeta2", C.GRADED_ZETA2)):
        ctx.checks.append(check_cocycle(
            psi, _act(C.V_FAMILY), C.OMEGA_M, A, B, gradings=gradings,
            name=f"{name} on H_inf", anchor="four graded cocycles of the formal-series algebra",
            rng=ctx.rng, points=ctx.points))
    vhat = C.vhat_family()
    ctx.add(check_bracket_table(vhat, graded_table(vhat, C.OMEGA_M), A, B,
                                anchor="V-hat with constants c1..c4 is a homomorphism",
                                rng=ctx.rng, points=ctx.points))


# -- classification of the extensions ----------------------------------------------

def phi1_family(relabel: bool) -> GeneratorFamily:
    """Recombined V-hat(c) generators after u -> -c1 u; ``relabel`` also flips A2, A3."""
    vh = C.vhat_family()
    c1, c2, c3, c4 = (C.TM.param(f"c{k}") for k in (1, 2, 3, 4))
    inv = c1.inverse()

    def recombined(i: int, f: DiffPoly) -> VectorField:
        if i == 0:
            return vh(0, f) - vh(3, C.ZETA1(f)) * (c3 * inv)
        if i == 1:
            return (vh(1, f) - vh(3, f) * ((c1 * c4 - 2 * c2 ** 2) * inv / 3)
                    - vh(2, f) * (c2 * inv))
        if i == 2:
            return vh(2, f) - vh(3, f) * (2 * c2 * inv)
        return vh(3, f)

    def build(i: int, f: DiffPoly) -> VectorField:
        if relabel and i in (2, 3):
            f = -f
        return _scale_u(recombined(i, f), -inv)

    return GeneratorFamily("phi1(Vhat)" + ("-relabelled" if relabel else ""), C.TM, (0, 1, 2, 3), build)


def phi2_family() -> GeneratorFamily:
    vh = C.vhat_family(0, "c2", "c3", "c4")
    c2, c3, c4 = (C.TM.param(f"c{k}") for k in (2, 3, 4))
    inv = c2.inverse()

    def build(i: int, f: DiffPoly) -> VectorField:
        if i == 0:
            X = vh(0, f) - vh(2, C.ZETA1(f)) * (c3 * inv / 2)
        elif i == 1:
            X = vh(1, f) - vh(2, f) * (c4 * inv / 2)
        else:
            X = vh(2, f)
        return _scale_u(X, inv)

    return GeneratorFamily("phi2(Vhat)", C.TM, (0, 1, 2), build)


def _scale_u(X: VectorField, factor: DiffPoly) -> VectorField:
    """Push forward along the fibre rescaling new_u = factor * u (coefficients are u-free)."""
    coeffs = dict(X.coeffs)
    if "u" in coeffs:
        coeffs["u"] = coeffs["u"] * factor
    return VectorField(X.chart, coeffs)


def phi1_grading1_defect() -> DiffPoly:
    """delta with phi1(Vhat_1(A)) = W1(A) + W3(delta * A) with the stated recombination coefficients."""
    c1, c2, c4 = (C.TM.param(f"c{k}") for k in (1, 2, 4))
    inv = c1.inverse()
    kappa = c4 - (c1 * c4 - 2 * c2 ** 2) / 3 - 2 * c2 ** 2 * inv
    return -kappa * inv


def suite_thm4(ctx: Ctx):
    fam = phi1_family(relabel=False)
    ctx.add(check_bracket_table(fam, graded_table(fam, C.OMEGA_M), A, B,
                                anchor="phi1 image of V-hat(c) obeys the graded g1 table",
                                rng=ctx.rng, points=ctx.points))
    img = phi1_family(relabel=True)
    anchor = "phi1 maps V-hat(c) onto g1 preserving the filtration"
    for i in (0, 2, 3):
        ctx.fields(f"phi1 image grading {i} = W{i}", img(i, A), C.W(i, A), anchor)
    delta = phi1_grading1_defect()
    res = ctx.fields("phi1 image grading 1 = W1 + W3(delta A)", img(1, A),
                     C.W(1, A) + C.W(3, delta * A), anchor)
    res.info["delta"] = str(delta)
    fam2 = phi2_family()
    ctx.add(check_bracket_table(fam2, graded_table(fam2, C.OMEGA_M), A, B,
                                anchor="phi2 image of V-hat(0,c2,c3,c4) obeys the graded g2 table",
                                rng=ctx.rng, points=ctx.points))
    for i in (0, 1, 2):
        ctx.fields(f"phi2 image grading {i} = g2 generator", fam2(i, A), C.G2(i, A),
                   "phi2 maps V-hat(0,c2,c3,c4) onto g2")
    ctx.add(check_bracket_table(C.G3, graded_table(C.G3, C.OMEGA_M), A, B,
                                anchor="g3 = V-hat(0,0,c3,c4) closes",
                                rng=ctx.rng, points=ctx.points))


# -- differential invariants ----------------------------------------------------------

def _annihilates(ctx: Ctx, label: str, X: VectorField, order: int, inv: DiffPoly, anchor: str):
    return ctx.vanishes(label, prolong(X, order)(inv), anchor)


def suite_thm5(ctx: Ctx):
    a1 = "I1 is a differential invariant of g1"
    for i in range(4):
        _annihilates(ctx, f"pr2(W{i}(A))(I1) = 0", C.W(i, A), 2, C.I1, a1)
    for name, X in (("W0'", C.W0_PRIME), ("W1'", C.W1_PRIME)):
        _annihilates(ctx, f"pr2({name})(I1) = 0", X, 2, C.I1,
                     "W0' and W1' are symmetries of I1")
    for inv_name, inv in (("I2", C.I2), ("I3", C.I3)):
        for i in C.G2.gradings:
            _annihilates(ctx, f"pr2(g2_{i}(A))({inv_name}) = 0", C.G2(i, A), 2, inv,
                         "I2 and I3 are differential invariants of g2")
    for inv_name, inv in (("I3", C.I3), ("I4", C.I4)):
        for i in C.G3.gradings:
            _annihilates(ctx, f"pr2(g3_{i}(A))({inv_name}) = 0", C.G3(i, A), 2, inv,
                         "I3 and I4 are differential invariants of g3 (symbolic c3, c4)")


def suite_frame(ctx: Ctx):
    anchor = "invariant derivations applied to I1"
    zero = DiffPoly()
    for k, expected in ((1, zero), (2, zero), (4, zero), (3, -C.J1)):
        ctx.identity(f"D{k}(I1) = {'-J1' if k == 3 else '0'}",
                     [(apply_derivation(FRAME[k - 1], C.I1), expected)], anchor)
    j_anchor = "J1 is a differential invariant of the third prolongation"
    for i in range(4):
        _annihilates(ctx, f"pr3(W{i}(A))(J1) = 0", C.W(i, A), 3, C.J1, j_anchor)
    for name, X in (("W0'", C.W0_PRIME), ("W1'", C.W1_PRIME)):
        _annihilates(ctx, f"pr3({name})(J1) = 0", X, 3, C.J1, j_anchor)
    ctx.identity("pr3(W0')(J1) = -2 J1 (relative invariant)",
                 [(prolong(C.W0_PRIME, 3)(C.J1), -2 * C.J1)],
                 "J1 has weight -2 under the scaling W0'")
    ctx.checks.append(_structure_function_check(ctx))
    placeholder = build_frame(E_PLACEHOLDERS)
    to_zero = {p.symbols().pop(): DiffPoly() for p in E_PLACEHOLDERS}
    pairs = [(substitute(b, to_zero), 0) for row in placeholder for b in row]
    ctx.identity("frame coefficients vanish at E = 0", pairs,
                 "the frame degenerates on the prolonged equation")
    ctx.checks.append(_singular_frame_check(ctx))


def _structure_function_check(ctx: Ctx) -> CheckResult:
    start = time.perf_counter()
    done, attempts, problems = 0, 0, []
    while done < FRAME_POINTS and attempts < 20 * FRAME_POINTS:
        attempts += 1
        pt = random_jet_point(ctx.rng)
        try:
            cs = structure_functions_at(pt)
        except SingularMatrixError:
            continue
        B = frame_matrix_at(pt)
        for i in range(1, 5):
            for j in range(1, 5):
                if i == j:
                    continue
                if any(cs[i, j, k] != -cs[j, i, k] for k in range(1, 5)):
                    problems.append({"pair": [i, j], "issue": "antisymmetry"})
                w = commutator_at(pt, i, j)
                rebuilt = [sum(cs[i, j, k] * B[k - 1][a] for k in range(1, 5)) for a in range(4)]
                if any(r != v for r, v in zip(rebuilt, w)):
                    problems.append({"pair": [i, j], "issue": "re-assembly residual",
                                     "point": point_text(pt)})
        done += 1
    if done < FRAME_POINTS:
        problems.append({"issue": f"only {done} regular points in {attempts} draws"})
    return CheckResult("structure functions at regular points", anchor="[D_i, D_j] = c_ij^k D_k",
                       status=PASS if not problems else FAIL,
                       witness=problems[0] if problems else None,
                       ms=(time.perf_counter() - start) * 1000.0,
                       info={"points": done, "draws": attempts})


def _singular_frame_check(ctx: Ctx) -> CheckResult:
    start = time.perf_counter()
    pt = singular_point(ctx.rng)
    values = {"I1": C.I1, "E1": C.E[0], "E2": C.E[1], "E3": C.E[2], "E4": C.E[3]}
    on_equation = all(evaluate(p, pt) == 0 for p in values.values())
    B = frame_matrix_at(pt)
    singular = det_rational(B) == 0
    try:
        structure_functions_at(pt)
        signalled = False
    except SingularMatrixError:
        signalled = True
    ok = on_equation and singular and signalled
    return CheckResult("frame singular on I1 = 0, E = 0", anchor="the equation is a singular manifold",
                       status=PASS if ok else FAIL,
                       witness=None if ok else {"point": point_text(pt)},
                       ms=(time.perf_counter() - start) * 1000.0,
                       info={"frame_zero": all(v == 0 for row in B for v in row)})


# -- symmetries of the second equation -------------------------------------------------

def _structure_entries(Wf: Callable[[int, DiffPoly], VectorField]):
    AB = poisson(A, B, C.OMEGA_M)
    for i in range(4):
        for j in range(4):
            yield f"[W{i}(A), W{j}(B)] = W{i + j}({{A,B}})", lie_bracket(Wf(i, A), Wf(j, B)), Wf(i + j, AB)
    for i in range(4):
        yield f"[W0', W{i}(A)] = W{i}(zeta1 A)", lie_bracket(C.W0_PRIME, Wf(i, A)), Wf(i, C.ZETA1(A))
        yield f"[W0'', W{i}(A)] = {i} W{i}(A)", lie_bracket(C.W0_DPRIME, Wf(i, A)), Wf(i, A) * i
        yield (f"[W1', W{i}(A)] = W{i + 1}((zeta1 + {i} zeta2) A)", lie_bracket(C.W1_PRIME, Wf(i, A)),
               Wf(i + 1, C.ZETA1(A) + i * A))
    yield "[W0', W0''] = 0", lie_bracket(C.W0_PRIME, C.W0_DPRIME), _zero(C.TM)
    yield "[W0', W1'] = 0", lie_bracket(C.W0_PRIME, C.W1_PRIME), _zero(C.TM)
    yield "[W0'', W1'] = W1'", lie_bracket(C.W0_DPRIME, C.W1_PRIME), C.W1_PRIME


def W_sign_corrected(i: int, f: DiffPoly) -> VectorField:
    """g1 generators with W2, W3 negated: the sign making the whole structure table consistent."""
    return C.W(i, f) * (-1 if i in (2, 3) else 1)


def suite_thm7(ctx: Ctx):
    anchor = "structure equations of the contact symmetry algebra"
    for name, lhs, rhs in _structure_entries(C.W):
        ctx.fields(name, lhs, rhs, anchor)
    res = ctx.identity("pr2(W0'')(I1) = -2 I1", [(prolong(C.W0_DPRIME, 2)(C.I1), -2 * C.I1)],
                       "I1 is a relative invariant of W0''")
    res.info["factor"] = -2
    # diagnostic: the same table with W2, W3 negated
    failures = [name for name, lhs, rhs in _structure_entries(W_sign_corrected) if lhs != rhs]
    ctx.checks.append(CheckResult(
        "diagnostic: table holds with W2, W3 negated",
        anchor="consistent sign choice for the structure table",
        status=PASS if not failures else FAIL,
        witness={"failing": failures} if failures else None,
        info={"entries": sum(1 for _ in _structure_entries(W_sign_corrected))}))


# -- Plebanski I and the six-dimensional analogue ----------------------------------------

def suite_thm8(ctx: Ctx):
    anchor = "structure equations of the Plebanski I symmetry algebra"
    P = C.PBI
    Ap, Ab, Bp, Bb = P.f("A"), P.f("Abar"), P.f("B"), P.f("Bbar")
    Ya, Yb = C.Y_ALPHA, C.Y_BETA
    z = _zero(P)
    for i in (0, 1):
        for j in (0, 1):
            k = i + j
            ctx.fields(f"[Ya{i}(A), Ya{j}(Abar)] = Ya{k}({{A,Abar}})", lie_bracket(Ya(i, Ap), Ya(j, Ab)),
                       Ya(k, poisson(Ap, Ab, C.PRODUCT_PBI)) if k <= 1 else z, anchor)
            ctx.fields(f"[Ya{i}(A), Yb{j}(B)] = 0", lie_bracket(Ya(i, Ap), Yb(j, Bp)), z, anchor)
            ctx.fields(f"[Yb{i}(B), Yb{j}(Bbar)] = Yb{k}({{B,Bbar}})", lie_bracket(Yb(i, Bp), Yb(j, Bb)),
                       Yb(k, poisson(Bp, Bb, C.PRODUCT_PBI)) if k <= 1 else z, anchor)
    for i in (0, 1):
        ctx.fields(f"[Ya{i}(A), Y0'] = Ya{i}(mu_alpha-(A))", lie_bracket(Ya(i, Ap), C.Y0_PRIME),
                   Ya(i, C.mu_alpha(Ap, -1)), anchor)
        ctx.fields(f"[Ya{i}(A), Y0''] = 0", lie_bracket(Ya(i, Ap), C.Y0_DPRIME), z, anchor)
        ctx.fields(f"[Ya{i}(A), Y0~] = Ya{i}(({2 - 2 * i})A - mu_alpha+(A))",
                   lie_bracket(Ya(i, Ap), C.Y0_TILDE),
                   Ya(i, (2 - 2 * i) * Ap - C.mu_alpha(Ap, 1)), anchor)
        ctx.fields(f"[Yb{i}(B), Y0'] = 0", lie_bracket(Yb(i, Bp), C.Y0_PRIME), z, anchor)
        ctx.fields(f"[Yb{i}(B), Y0''] = Yb{i}(mu_beta-(B))", lie_bracket(Yb(i, Bp), C.Y0_DPRIME),
                   Yb(i, C.mu_beta(Bp, -1)), anchor)
        ctx.fields(f"[Yb{i}(B), Y0~] = Yb{i}(mu_beta+(B) - ({2 - 2 * i})B)",
                   lie_bracket(Yb(i, Bp), C.Y0_TILDE),
                   Yb(i, C.mu_beta(Bp, 1) - (2 - 2 * i) * Bp), anchor)
    inv = "u_tx u_yz - u_tz u_xy is an absolute invariant"
    for i in (0, 1):
        _annihilates(ctx, f"pr2(Ya{i}(A))(PbI_lhs) = 0", Ya(i, Ap), 2, C.PBI_LHS, inv)
        _annihilates(ctx, f"pr2(Yb{i}(B))(PbI_lhs) = 0", Yb(i, Bp), 2, C.PBI_LHS, inv)
    for name, X in C.PBI_EXTRAS.items():
        _annihilates(ctx, f"pr2({name})(PbI_lhs) = 0", X, 2, C.PBI_LHS, inv)


def suite_sixd(ctx: Ctx):
    anchor = "six-dimensional Pfaffian equation"
    pf = C.pf6d()
    degrees = degree_in(pf, lambda s: s.tag == UJET and s.order == 2)
    ctx.checks.append(CheckResult("Pf6D is cubic in 2-jets", anchor=anchor,
                                  status=PASS if degrees == {3} and len(pf) else FAIL,
                                  witness=None if degrees == {3} else {"degrees": sorted(degrees)},
                                  info={"terms": len(pf)}))
    ctx.identity("Pf6D^2 = det", [(pf * pf, det_expansion(C.pf6d_matrix()))], anchor)
    inv = "Pf6D is annihilated by every six-dimensional generator"
    for k in (1, 2, 3):
        f = C.SIXD.f(f"A{k}")
        for i in (0, 1):
            _annihilates(ctx, f"pr2(S{i}(A{k}))(Pf6D) = 0", C.SIXD_FAMILY(i, f), 2, pf, inv)
    f1, g1 = C.SIXD.f("A1"), C.SIXD.f("B1")
    ctx.add(check_bracket_table(C.SIXD_FAMILY, graded_table(C.SIXD_FAMILY, C.SIXD_FORM), f1, g1,
                                anchor="six-dimensional generators form a graded algebra",
                                rng=ctx.rng, points=ctx.points))


SUITES: dict[str, Callable[[Ctx], None]] = {
    "thm1": suite_thm1,
    "prop2": suite_prop2,
    "prop3": suite_prop3,
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "thm3x": suite_thm3x,
    "thm4": suite_thm4,
    "thm5": suite_thm5,
    "frame": suite_frame,
    "thm7": suite_thm7,
    "thm8": suite_thm8,
    "sixd": suite_sixd,
}


def suite_names() -> list[str]:
    return list(SUITES)


def verify_suite(name: str, seed: int = 0, points: int = 20) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(name) from None
    ctx = Ctx(name, seed, points)
    fn(ctx)
    return SuiteResult(name, ctx.checks)
