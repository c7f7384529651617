import random

import pytest
from hypothesis import given, settings

from heavenly.diffpoly import DiffPoly, to_text
from heavenly.dsl import BinOp, Name, Neg, Num, Pow, parse, parse_ast
from heavenly.errors import ParseError
from heavenly.plebanski.catalog import CHARTS, I1, M, TM

from strategies import diffpolys, random_diffpoly


def test_ast_shape():
    assert parse_ast("-t^2") == Neg(Pow(Name("t", None, 1), 2))
    node = parse_ast("1 + A[1,0]*z")
    assert isinstance(node, BinOp) and node.op == "+"
    assert node.left == Num(1)
    assert node.right.right == Name("z", None, 11)


def test_precedence():
    t, z = M.coord("t"), M.coord("z")
    assert parse("1 + 2*t^2", M) == 1 + 2 * t ** 2
    assert parse("2*(t + z)", M) == 2 * t + 2 * z
    assert parse("t - z - 1", M) == t - z - 1
    assert parse("-t^2", M) == -(t ** 2)
    assert parse("3/2*t", M) == DiffPoly.const("3/2") * t
    assert parse("t/z^2", M) == t * z ** -2
    assert parse("--t", M) == t


def test_bare_names_are_zero_jets():
    assert parse("u", TM) == TM.u()
    assert parse("A", TM) == TM.f("A")


def test_sample_expression_on_TM():
    # u_xy^2 - u_xx u_yy + u_ty - u_xz; this is I1 with the Hessian sign reversed
    p = parse("u[0,0,1,1]^2 - u[0,0,2,0]*u[0,0,0,2] + u[1,0,0,1] - u[0,1,1,0]", TM)
    u = TM.u
    assert p == u("x", "y") ** 2 - u("x", "x") * u("y", "y") + u("t", "y") - u("x", "z")
    assert p != I1 and p != -I1
    assert parse("u[0,0,1,1]^2 - u[0,0,2,0]*u[0,0,0,2] - u[1,0,0,1] + u[0,1,1,0]", TM) == -I1


def test_syntax_error_offset():
    with pytest.raises(ParseError) as exc:
        parse("t + + z", M)
    assert exc.value.position == 4


@pytest.mark.parametrize("text, fragment", [
    ("A[1]", "arity"),
    ("foo", "unknown symbol"),
    ("t/(t + z)", "single-term"),
    ("(t + z)^-1", "non-monomial"),
    ("t^", "expected 'int'"),
    ("(t", r"expected '\)'"),
    ("t $ z", "unexpected character"),
    ("t[1]", "takes no index"),
    ("u^-1", "cannot invert"),
    ("", "unexpected end"),
])
def test_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse(text, TM)


def test_unicode_digits_are_rejected():
    with pytest.raises(ParseError):
        parse("t^٣", M)


@pytest.mark.parametrize("chart", list(CHARTS.values()), ids=list(CHARTS))
def test_round_trip_200_per_chart(chart):
    rng = random.Random(f"round-trip:{chart.name}")
    for _ in range(200):
        p = random_diffpoly(rng, chart)
        assert parse(to_text(p), chart) == p


@settings(max_examples=100, deadline=None)
@given(diffpolys(TM))
def test_round_trip_property(p):
    assert parse(to_text(p), TM) == p
