import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from graphic_pd.groebner import (
    BettiTable,
    FreeModuleElement,
    GradingError,
    Presentation,
    groebner_basis,
    ideal_groebner_basis,
    ideal_membership,
    minimal_free_resolution,
    minimal_generators,
    minimize_complex,
    module_kernel,
    projective_dimension,
)
from graphic_pd.poly import Polynomial, determinant, product


def xs(n):
    return [Polynomial.var(i, n) for i in range(1, n + 1)]


def ideal(polys):
    n = polys[0].nvars
    return Presentation([FreeModuleElement((p,), (0,)) for p in polys], n, (0,))


def check_certificate(f, gens, m):
    total = Polynomial.zero(f.nvars)
    for c, g in zip(m.cofactors, gens):
        total = total + c * g
    return total == f


def test_monomial_ideal_is_its_own_basis():
    x1, x2 = xs(2)
    gb = ideal_groebner_basis([x1, x2])
    assert sorted(str(e.components[0]) for e in gb.elements) == sorted([str(x1), str(x2)])


def test_normal_forms_modulo_linear_forms():
    x1, x2, x3 = xs(3)
    gb = ideal_groebner_basis([x1 - x2, x2 - x3])
    e = lambda p: FreeModuleElement((p,), (0,))  # noqa: E731
    assert gb.normal_form(e(x3)) == gb.normal_form(e(x1))
    assert gb.contains(e(x1 - x3))
    assert not gb.contains(e(x1))


def test_reduced_basis_is_order_independent():
    x1, x2, x3, x4 = xs(4)
    gens = [x1 * x2 - x3 ** 2, x2 * x4 - x3 ** 2 + x1 * x4, x1 ** 2 - x2 * x3, x4 ** 2 - x1 * x3]
    ref = ideal_groebner_basis(gens)
    rng = random.Random(1)
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        scaled = [g.scale(rng.choice([-3, 2, 5])) for g in shuffled]
        assert ideal_groebner_basis(scaled) == ref


def test_defining_polynomial_lies_in_ideal_of_its_factors():
    x1, x2, x3 = xs(3)
    factors = [x1 - x2, x1 - x3, x2 - x3]
    m = ideal_membership(product(factors, 3), factors)
    assert m.member and check_certificate(product(factors, 3), factors, m)


def test_membership_examples():
    x1, x2 = xs(2)
    m = ideal_membership(x1 ** 2, [x1])
    assert m.member and check_certificate(x1 ** 2, [x1], m)
    m = ideal_membership(x1, [x2])
    assert not m.member and m.remainder == x1


def test_membership_inhomogeneous():
    x1, x2 = xs(2)
    one = Polynomial.one(2)
    f = (x1 + one) * (x2 ** 2 - x1) + x2 * (x1 * x2 - one)
    gens = [x1 + one, x1 * x2 - one]
    m = ideal_membership(f, gens)
    assert m.member and check_certificate(f, gens, m)


coeffs = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(-4, 4)), max_size=3)


@settings(max_examples=30, deadline=None)
@given(st.lists(coeffs, min_size=3, max_size=3))
def test_random_combinations_are_members(cs):
    x1, x2, x3 = xs(3)
    gens = [x1 * x2 - x3 ** 2, x2 ** 2 - x1 * x3, x1 ** 2 - x2 * x3]
    mult = [Polynomial.from_exponents({(a, b, c): k for a, b, c, k in terms}, 3) for terms in cs]
    f = sum((m * g for m, g in zip(mult, gens)), Polynomial.zero(3))
    m = ideal_membership(f, gens)
    assert m.member and check_certificate(f, gens, m)


def test_koszul_syzygy():
    x1, x2 = xs(2)
    ker = module_kernel([FreeModuleElement((x1,), (0,)), FreeModuleElement((x2,), (0,))])
    assert len(ker.generators) == 1
    g = ker.generators[0].components
    assert g in ((x2, -x1), (-x2, x1))


def test_identity_has_zero_kernel():
    one, zero = Polynomial.one(2), Polynomial.zero(2)
    cols = [FreeModuleElement((one, zero), (0, 0)), FreeModuleElement((zero, one), (0, 0))]
    assert module_kernel(cols).generators == []


def test_zero_column_needs_shift():
    zero = Polynomial.zero(2)
    with pytest.raises(GradingError):
        module_kernel([FreeModuleElement((zero,), (0,))])
    ker = module_kernel([FreeModuleElement((zero,), (0,))], source_shifts=(3,))
    assert [g.degree for g in ker.generators] == [3]


def test_inhomogeneous_element_has_no_degree():
    x1, x2 = xs(2)
    with pytest.raises(GradingError):
        FreeModuleElement((x1 + x2 * x2,), (0,)).degree


def test_minimal_generators_drop_redundant():
    x1, x2 = xs(2)
    gens = [FreeModuleElement((p,), (0,)) for p in (x1, x1 * x2, x2, x1 + x2)]
    kept = minimal_generators(gens)
    assert len(kept) == 2


def test_koszul_resolution():
    x1, x2 = xs(2)
    res = minimal_free_resolution(ideal([x1, x2]))
    assert res.betti() == {(0, 1): 2, (1, 2): 1}
    assert projective_dimension(res) == 1
    assert res.compositions_vanish() and res.is_minimal()


def test_koszul_three_variables():
    res = minimal_free_resolution(ideal(xs(3)))
    assert res.betti() == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert res.compositions_vanish() and res.is_minimal()


def test_twisted_cubic():
    # 2x2 minors of [[x1, x2, x3], [x2, x3, x4]]
    x1, x2, x3, x4 = xs(4)
    rows = [[x1, x2, x3], [x2, x3, x4]]
    minors = [determinant([[rows[0][a], rows[0][b]], [rows[1][a], rows[1][b]]]) for a, b in combinations(range(3), 2)]
    res = minimal_free_resolution(ideal(minors))
    assert res.betti() == {(0, 2): 3, (1, 3): 2}
    assert res.compositions_vanish()


def test_free_module_resolution():
    one, zero = Polynomial.one(3), Polynomial.zero(3)
    P = Presentation([FreeModuleElement((one, zero), (0, 1)), FreeModuleElement((zero, one), (0, 1))], 3, (0, 1))
    res = minimal_free_resolution(P)
    assert projective_dimension(res) == 0
    assert res.betti() == {(0, 0): 1, (0, 1): 1}


def test_minimize_complex_removes_trivial_summand():
    x1, x2 = xs(2)
    one, zero = Polynomial.one(2), Polynomial.zero(2)
    amb = (0,)
    gens = [FreeModuleElement((p,), amb) for p in (x1, x2, x1)]
    f0 = (1, 1, 1)
    rel = [FreeModuleElement((x2, -x1, zero), f0), FreeModuleElement((one, zero, -one), f0)]
    maps, shifts = minimize_complex([gens, rel], [f0, (2, 1)], 2, amb)
    assert BettiTable.from_shifts(shifts) == {(0, 1): 2, (1, 2): 1}
    # the surviving relation still kills the surviving generators
    (col,) = maps[1]
    total = sum((c * g.components[0] for c, g in zip(col.components, maps[0])), Polynomial.zero(2))
    assert not total


def test_betti_table_helpers():
    b = BettiTable({(0, 0): 1, (0, 1): 1, (0, 2): 1})
    assert b.projective_dimension == 0
    assert b.ranks() == [3]
    assert [b.hilbert_function(d, 3) for d in range(4)] == [1, 4, 10, 19]
    k = BettiTable({(0, 1): 2, (1, 2): 1})
    assert [k.hilbert_function(d, 2) for d in range(4)] == [0, 2, 3, 4]
    assert "total" in k.to_text()


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 12)), st.integers(1, 30), max_size=8))
def test_betti_json_round_trip(data):
    b = BettiTable(data)
    assert BettiTable.from_json(b.to_json()) == b


def test_module_basis_membership():
    x1, x2 = xs(2)
    zero = Polynomial.zero(2)
    sh = (0, 0)
    gb = groebner_basis([FreeModuleElement((x1, x2), sh), FreeModuleElement((x2, zero), sh)])
    assert gb.contains(FreeModuleElement((x1 * x2 + x2 * x2, x2 * x2), sh))
    assert not gb.contains(FreeModuleElement((zero, x2), sh))
