from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from graphic_pd.linalg import exact_rank
from graphic_pd.poly import (
    DivisibilityError,
    Polynomial,
    arith,
    cofactor_determinant,
    determinant,
    elementary_symmetric,
    graded_monomials,
    numeric_determinant,
    parse_polynomial,
    product,
    reduce_mod_linears,
)

N = 3


def x(i, n=N):
    return Polynomial.var(i, n)


exps = st.tuples(*[st.integers(0, 3)] * N)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda d: Polynomial.from_exponents(d, N))


def dense_mul(f, g):
    """Schoolbook product on exponent dictionaries, independent of the packed keys."""
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return Polynomial.from_exponents(out, f.nvars)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(N)
    assert f * Polynomial.one(N) == f


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_product_matches_schoolbook(f, g):
    assert f * g == dense_mul(f, g)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_exact_division_inverts_product(f, g):
    if not g:
        return
    assert (f * g).exact_div(g) == f


@settings(max_examples=40, deadline=None)
@given(polys)
def test_string_round_trip(f):
    assert parse_polynomial(str(f), N) == f


def test_arith_examples():
    assert arith("mul", x(1) - x(2), x(1) + x(2)) == x(1) ** 2 - x(2) ** 2
    assert arith("exact_div", x(1) ** 2 - x(2) ** 2, x(1) - x(2)) == x(1) + x(2)
    with pytest.raises(DivisibilityError):
        arith("exact_div", x(1) ** 2, x(2))


def test_coefficients_are_rational():
    f = x(1).scale(Fraction(1, 3)) + x(1).scale(Fraction(2, 3))
    assert f == x(1)
    assert f.lc() == 1


def test_edge_cases():
    assert Polynomial.zero(2).degree is None or Polynomial.zero(2).degree < 0
    assert not Polynomial.zero(2)
    with pytest.raises(ValueError):
        Polynomial.var(4, 3)
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)


def test_reduce_mod_linears():
    assert reduce_mod_linears(x(2, 2), [(1, 2)]) == x(1, 2)
    ell = 6
    B1 = product([x(1, ell) - x(j, ell) for j in range(4, ell)], ell)
    assert reduce_mod_linears(B1, [(1, 2), (2, 3)]) == (x(1, ell) - x(4, ell)) * (x(1, ell) - x(5, ell))
    g = x(3) ** 2 + x(2)
    assert reduce_mod_linears((x(1) - x(2)) * g, [(1, 2)]) == Polynomial.zero(N)


def test_vandermonde():
    M = [[x(j) ** i for j in range(1, 4)] for i in range(3)]
    V = (x(1) - x(2)) * (x(1) - x(3)) * (x(2) - x(3))
    d = determinant(M)
    assert d == V or d == -V


def test_repeated_column_is_zero():
    a, b = x(1) + x(2), x(3) ** 2
    M = [[a, a, b], [b, b, a], [x(1), x(1), x(2)]]
    assert determinant(M) == Polynomial.zero(N)


low_exps = st.tuples(*[st.integers(0, 1)] * N)
entries = st.dictionaries(low_exps, st.integers(-3, 3), max_size=3).map(lambda d: Polynomial.from_exponents(d, N))
small = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(entries, min_size=k, max_size=k), min_size=k, max_size=k))


def leibniz(M):
    """Permutation expansion: the textbook definition."""
    n = len(M)
    total = Polynomial.zero(N)
    for perm in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = product([M[i][perm[i]] for i in range(n)], N)
        total = total + (term if inv % 2 == 0 else -term)
    return total


@settings(max_examples=30, deadline=None)
@given(small)
def test_determinant_against_references(M):
    d = determinant(M)
    assert d == cofactor_determinant(M)
    if len(M) <= 4:
        assert d == leibniz(M)
    point = (Fraction(2), Fraction(-3), Fraction(5, 7))
    assert d.evaluate(point) == numeric_determinant(M, point)


def test_elementary_symmetric():
    ell = 5
    assert elementary_symmetric(0, {2}, ell) == Polynomial.one(ell)
    assert elementary_symmetric(1, {2, 3}, ell) == x(1, ell) + x(4, ell) + x(5, ell)
    assert elementary_symmetric(2, (), 3) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    with pytest.raises(ValueError):
        elementary_symmetric(4, {1, 2}, 5)


@pytest.mark.parametrize("j", range(0, 5))
def test_elementary_symmetric_matches_subset_sum(j):
    # brute force over j-subsets, compared at a rational point
    ell, omit = 6, {2, 5}
    keep = [k for k in range(1, ell + 1) if k not in omit]
    pt = [Fraction(k * k - 3) for k in range(1, ell + 1)]
    want = sum((Fraction(1) if not s else product_frac(pt[k - 1] for k in s)) for s in combinations(keep, j))
    assert elementary_symmetric(j, omit, ell).evaluate(pt) == want


def product_frac(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def test_graded_monomials():
    assert graded_monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert graded_monomials(4, 0) == [(0, 0, 0, 0)]
    assert len(graded_monomials(3, 2)) == 6


def test_exact_rank():
    assert exact_rank([{0: 1, 1: 2}, {0: 2, 1: 4}, {2: Fraction(1, 2)}]) == 2
    assert exact_rank([]) == 0
