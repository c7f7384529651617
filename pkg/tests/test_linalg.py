import itertools
import random
from fractions import Fraction

import pytest
from gmpy2 import mpq

from heavenly.diffpoly import DiffPoly
from heavenly.errors import InconsistentSystemError, SingularMatrixError
from heavenly.linalg import det_expansion, det_rational, pfaffian, rank_rational, solve_exact


def antisym(entries, n):
    m = [[DiffPoly() for _ in range(n)] for _ in range(n)]
    for (i, j), v in zip(itertools.combinations(range(n), 2), entries):
        m[i][j] = DiffPoly._coerce(v)
        m[j][i] = -m[i][j]
    return m


def generic(n):
    names = [DiffPoly.param(f"a{i + 1}{j + 1}") for i, j in itertools.combinations(range(n), 2)]
    return antisym(names, n), {(i, j): s for (i, j), s in zip(itertools.combinations(range(n), 2), names)}


def rational_antisym(rng, n=6):
    return antisym([mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n * (n - 1) // 2)], n)


def test_pfaffian_2x2():
    m, a = generic(2)
    assert pfaffian(m) == a[0, 1]


def test_pfaffian_4x4_by_hand():
    m, a = generic(4)
    assert pfaffian(m) == a[0, 1] * a[2, 3] - a[0, 2] * a[1, 3] + a[0, 3] * a[1, 2]


def test_pfaffian_squared_is_det_symbolic_4x4():
    m, _ = generic(4)
    assert pfaffian(m) ** 2 == det_expansion(m)


def test_pfaffian_squared_is_det_on_random_6x6():
    rng = random.Random(6)
    for _ in range(100):
        m = rational_antisym(rng)
        assert pfaffian(m) ** 2 == det_rational(m)


def test_pfaffian_of_block_identity():
    # dx1^dp1 + dx2^dp2 + dx3^dp3 in the order (x1, p1, x2, p2, x3, p3) has Pf = 1
    pairs = list(itertools.combinations(range(6), 2))
    m = antisym([int(p in ((0, 1), (2, 3), (4, 5))) for p in pairs], 6)
    assert pfaffian(m) == 1


def test_pfaffian_rejects_bad_input():
    with pytest.raises(ValueError, match="even"):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(ValueError, match="antisymmetric"):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(ValueError, match="antisymmetric"):
        pfaffian([[1, 1], [-1, 0]])


def test_det_expansion_agrees_with_elimination():
    rng = random.Random(11)
    for n in range(1, 6):
        m = [[mpq(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
        assert det_expansion(m) == det_rational(m)


def test_det_known_values():
    assert det_rational([[1, 2], [3, 4]]) == -2
    assert det_rational([[0, 1], [1, 0]]) == -1
    assert det_rational([[1, 2], [2, 4]]) == 0


def test_solve_identity():
    b = [Fraction(1, 2), 3, -7]
    assert solve_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]], b) == b


def test_solve_singular_and_inconsistent():
    with pytest.raises(SingularMatrixError):
        solve_exact([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(InconsistentSystemError):
        solve_exact([[1, 2], [2, 4]], [1, 3])


def test_solve_random_4x4_by_remultiplication():
    rng = random.Random(4)
    done = 0
    while done < 25:
        M = [[mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)] for _ in range(4)]
        if not det_rational(M):
            continue
        b = [mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        xs = solve_exact(M, b)
        assert [sum(M[i][k] * xs[k] for k in range(4)) for i in range(4)] == b
        done += 1


def test_rank():
    assert rank_rational([[1, 2], [2, 4]]) == 1
    assert rank_rational([[1, 0], [0, 1]]) == 2
    assert rank_rational([[0, 0], [0, 0]]) == 0
