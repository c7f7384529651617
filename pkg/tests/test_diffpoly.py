import pickle
import random
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from heavenly.diffpoly import (COORD, FJET, UJET, DiffPoly, add, collect, degree_in, evaluate,
                               is_zero, mul, neg, pdiff, scale, substitute, to_text)
from heavenly.errors import DeclarationError, EvaluationError
from heavenly.plebanski.catalog import I1, M, TM

from strategies import diffpolys, random_diffpoly

t, z, x, y = (DiffPoly.coord(c) for c in ("t", "z", "x", "y"))
A = TM.f("A")


def fj(*idx):
    return DiffPoly.fjet("A", idx, ("t", "z"))


def sym(p):
    (s,) = p.symbols()
    return s


# -- examples ---------------------------------------------------------------------

def test_additive_inverse_is_zero():
    p = 3 * t * z - x ** -2 + A
    assert is_zero(add(p, neg(p)))


def test_product_of_coords_is_a_single_monomial():
    p = mul(t, z)
    assert p.is_monomial()
    assert list(p.items())[0][1] == 1


def test_laurent_cancellation():
    assert mul(x ** -1, x) == 1
    assert is_zero(mul(x, x ** -1) - 1)


def test_pdiff_power_rule():
    assert pdiff(t ** 2 * z, "t") == 2 * t * z
    assert pdiff(x ** -2, "x") == -2 * x ** -3


def test_pdiff_promotes_fjets():
    assert pdiff(x * fj(1, 0), "t") == x * fj(2, 0)
    assert pdiff(fj(1, 0), "x") == 0


def test_pdiff_leaves_ujets_inert():
    assert pdiff(TM.u("x"), "x") == 0


def test_pdiff_unknown_coordinate():
    with pytest.raises(DeclarationError):
        pdiff(t, "w", known_coords=("t", "z"))


def test_evaluate_examples():
    assert evaluate(t ** 2 - z, {sym(t): Fraction(3, 2), sym(z): Fraction(1, 4)}) == 2
    assert evaluate(x ** -2, {sym(x): Fraction(1, 3)}) == 9
    with pytest.raises(EvaluationError, match="division by zero"):
        evaluate(x ** -2, {sym(x): 0})
    with pytest.raises(EvaluationError, match="unassigned"):
        evaluate(t + z, {sym(t): 1})


def test_is_zero_examples():
    assert not is_zero(I1)
    assert is_zero(I1 - I1)


def test_collect_by_fjets():
    B = DiffPoly.fjet("B", (0, 1), ("t", "z"))
    p = fj(1, 0) * B * t + fj(1, 0)
    got = collect(p, {FJET})
    assert got == {fj(1, 0) * B: t, fj(1, 0): DiffPoly.const(1)}
    assert collect(DiffPoly(), {FJET}) == {}


def test_collect_reassembles():
    rng = random.Random(3)
    for _ in range(20):
        p = random_diffpoly(rng, TM)
        parts = collect(p, lambda s: s.tag in (UJET, FJET))
        total = DiffPoly()
        for k, v in parts.items():
            assert not any(s.tag in (UJET, FJET) for s in v.symbols())
            total = total + k * v
        assert total == p


def test_negative_exponent_rejected_on_jets():
    with pytest.raises(ArithmeticError):
        TM.u("x") ** -1


def test_floats_rejected():
    with pytest.raises(TypeError):
        DiffPoly.const(0.5)


def test_scale_and_coefficients_are_reduced():
    p = scale(t, Fraction(6, 4))
    (_, c), = p.items()
    assert c == mpq(3, 2)
    assert scale(t, 0) == 0


def test_zero_coefficients_are_dropped():
    p = t + z - t
    assert p == z and len(p) == 1


def test_text_is_canonical():
    assert to_text(DiffPoly()) == "0"
    assert to_text(-Fraction(3, 2) * t ** 2 + x ** -2 * TM.u("x", "y")) == "-3/2*t^2 + x^-2*u[0,0,1,1]"


def test_substitute():
    assert substitute(t * z + z, {sym(z): t}) == t ** 2 + t


def test_degree_in():
    p = TM.u("x", "x") * TM.u("y", "y") + TM.u("t")
    assert degree_in(p, lambda s: s.tag == UJET and s.order == 2) == {2, 0}
    assert degree_in(t, lambda s: s.tag == COORD) == {1}


def test_pickle_round_trip():
    p = I1 * x ** -1 + fj(2, 1)
    assert pickle.loads(pickle.dumps(p)) == p


def test_hash_consistent_with_equality():
    assert hash(t * z + 1) == hash(1 + z * t)
    assert hash(DiffPoly.const(2)) == hash(DiffPoly.const(Fraction(4, 2)))


# -- properties -----------------------------------------------------------------------

polys = diffpolys(M)


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p
    assert p * 1 == p and p + 0 == p


@settings(max_examples=150, deadline=None)
@given(diffpolys(TM))
def test_pdiff_commutes(p):
    assert pdiff(pdiff(p, "t"), "z") == pdiff(pdiff(p, "z"), "t")
    assert pdiff(pdiff(p, "x"), "t") == pdiff(pdiff(p, "t"), "x")


@settings(max_examples=100, deadline=None)
@given(diffpolys(TM), diffpolys(TM))
def test_pdiff_leibniz(p, q):
    assert pdiff(p * q, "t") == pdiff(p, "t") * q + p * pdiff(q, "t")


def _point(polys, seed):
    rng = random.Random(seed)
    syms = set()
    for p in polys:
        syms |= p.symbols()
    return {s: mpq(rng.choice([n for n in range(-9, 10) if n]), rng.randint(1, 9))
            for s in sorted(syms, key=lambda s: s.key)}


@settings(max_examples=150, deadline=None)
@given(diffpolys(TM), diffpolys(TM), st.integers(0, 10 ** 6))
def test_evaluate_is_a_ring_homomorphism(p, q, seed):
    pt = _point([p, q], seed)
    assert evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt)
    assert evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt)


@settings(max_examples=100, deadline=None)
@given(diffpolys(TM), diffpolys(TM), diffpolys(TM))
def test_canonical_zero_evaluates_to_zero(p, q, r):
    lhs, rhs = (p + q) * r, p * r + q * r
    assert is_zero(lhs - rhs)
    for seed in range(20):
        pt = _point([p, q, r], seed)
        assert evaluate(lhs, pt) == evaluate(rhs, pt)
