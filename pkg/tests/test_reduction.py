from fractions import Fraction
from itertools import product
from math import gcd
from functools import reduce

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from enriques import reduction

vectors = st.lists(st.integers(-30, 30), min_size=4, max_size=10).filter(any)


@settings(max_examples=200, deadline=None)
@given(vectors)
def test_split_functional_is_unimodular(w):
    delta, pre, kernel = reduction.split_functional(w)
    assert delta == reduce(gcd, w)
    assert sum(a * b for a, b in zip(w, pre)) == delta
    assert all(sum(a * b for a, b in zip(w, k)) == 0 for k in kernel)
    assert abs(sympy.Matrix([pre] + kernel).det()) == 1


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def test_lll_preserves_lattice_and_shortens():
    basis = [[1, 0, 0, 12345], [0, 1, 0, 54321], [0, 0, 1, 99991]]
    red = reduction.lll_reduce(basis, _dot)
    m = sympy.Matrix(basis)
    r = sympy.Matrix(red)
    # same row lattice: r = t m with t integral and unimodular
    t = r * m.T * (m * m.T).inv()
    assert t * m == r
    assert all(x.is_integer for x in t) and abs(t.det()) == 1
    assert max(_dot(v, v) for v in red) < max(_dot(v, v) for v in basis)


def test_lll_lovasz_condition():
    basis = [[7, 3, 11, 2], [5, -4, 9, 13], [1, 8, -6, 3], [10, 2, 2, 7]]
    red = reduction.lll_reduce(basis, _dot)
    gs = []
    for v in red:
        w = [Fraction(x) for x in v]
        for u in gs:
            mu = Fraction(_dot(v, u)) / _dot(u, u)
            w = [a - mu * b for a, b in zip(w, u)]
        gs.append(w)
    for k in range(1, len(red)):
        mu = Fraction(_dot(red[k], gs[k - 1])) / _dot(gs[k - 1], gs[k - 1])
        assert _dot(gs[k], gs[k]) >= (Fraction(3, 4) - mu * mu) * _dot(gs[k - 1], gs[k - 1])
        for j in range(k):
            assert abs(Fraction(_dot(red[k], gs[j])) / _dot(gs[j], gs[j])) <= Fraction(1, 2)


def test_ldl_solve_matches_sympy():
    a = [[4, 1, 0], [1, 3, 1], [0, 1, 2]]
    q, mu = reduction.ldl(a)
    x = reduction.ldl_solve(q, mu, [1, 2, 3])
    assert [sympy.Rational(int(v.numerator), int(v.denominator)) for v in x] == list(
        sympy.Matrix(a).LUsolve(sympy.Matrix([1, 2, 3])))


def test_integer_window_and_floor_sqrt():
    assert reduction.floor_sqrt(Fraction(9, 4)) == 1
    assert reduction.floor_sqrt(16) == 4
    assert reduction.integer_window(Fraction(1, 2), Fraction(1, 4)) == [0, 1]
    assert reduction.integer_window(0, -1) == []


def test_fincke_pohst_matches_box_scan():
    a = [[6, 2, 1], [2, 5, -1], [1, -1, 4]]
    q, mu = reduction.ldl(a)
    center = [Fraction(1, 3), Fraction(-1, 2), Fraction(2, 5)]
    bound = Fraction(23, 2)
    got = sorted(tuple(y) for y in reduction.fincke_pohst(q, mu, center, bound))

    def form(y):
        z = [Fraction(yi) - c for yi, c in zip(y, center)]
        return sum(a[i][j] * z[i] * z[j] for i in range(3) for j in range(3))

    want = sorted(y for y in product(range(-6, 7), repeat=3) if form(y) <= bound)
    assert got == want and got
