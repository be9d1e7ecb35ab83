import random
from collections import Counter

import pytest

from graphic_pd.arrangement import (
    Arrangement,
    PreconditionError,
    betti_arrangement,
    betti_graph,
    braid_arrangement,
    defining_polynomial,
    derivation_generators,
    derivation_module,
    flat_of,
    flats,
    graphic_arrangement,
    is_generic,
    is_in_d,
    localization,
    pd_arrangement,
    pd_graph,
    rank,
    resolve_derivation_module,
    restriction,
    saito_check,
    terao_b,
    theta0,
)
from graphic_pd.derivation import Derivation
from graphic_pd.families import b_family, theta
from graphic_pd.graphs import Graph, enumerate_graphs, is_chordal, standard_graph
from graphic_pd.hilbert import free_dimension, hilbert_oracle
from graphic_pd.poly import Polynomial, product


def x(i, n):
    return Polynomial.var(i, n)


def K(n):
    return standard_graph("complete", n)


def C(n):
    return standard_graph("cycle", n)


def test_graphic_arrangement_forms():
    A = graphic_arrangement(K(3))
    assert set(A.forms) == {(1, -1, 0), (1, 0, -1), (0, 1, -1)}
    assert len(graphic_arrangement(standard_graph("edgeless", 4))) == 0
    assert len(graphic_arrangement(standard_graph("antihole", 6))) == 9


def test_rank_and_defining_polynomial():
    for ell in range(3, 8):
        assert rank(graphic_arrangement(C(ell))) == ell - 1
        assert rank(graphic_arrangement(K(ell))) == ell - 1
    Q = defining_polynomial(graphic_arrangement(K(3)))
    assert Q == (x(1, 3) - x(2, 3)) * (x(1, 3) - x(3, 3)) * (x(2, 3) - x(3, 3))
    two_components = Graph.from_edges(5, [(1, 2), (3, 4), (4, 5)])
    assert rank(graphic_arrangement(two_components)) == 3


def test_flats_of_triangle():
    fl = flats(graphic_arrangement(K(3)), 2)
    codims = Counter(X.codim for X in fl)
    assert codims[1] == 3 and codims[2] == 1
    top = [X for X in fl if X.codim == 2][0]
    assert len(top) == 3


def test_flats_general_path_agrees_with_partitions():
    G = standard_graph("antihole", 6)
    A = graphic_arrangement(G)
    B = Arrangement.from_forms(A.forms)
    assert not B.is_graphic
    key = lambda fl: sorted((X.codim, sorted(X.hyperplanes)) for X in fl)  # noqa: E731
    assert key(flats(A)) == key(flats(B))


def test_localization_at_triangle():
    A = graphic_arrangement(K(4))
    with pytest.raises(PreconditionError):
        flat_of(A, [A.index((1, -1, 0, 0)), A.index((0, 1, -1, 0))])
    X = flat_of(A, [A.index(f) for f in ((1, -1, 0, 0), (0, 1, -1, 0), (1, 0, -1, 0))])
    L = localization(A, X)
    assert len(L) == 3 and X.codim == 2
    assert set(L.forms) == {(1, -1, 0, 0), (1, 0, -1, 0), (0, 1, -1, 0)}


def test_restriction_of_braid():
    for ell in range(3, 7):
        R, images = restriction(braid_arrangement(ell), (1, 2))
        assert R.ell == ell - 1 and len(R) == (ell - 1) * (ell - 2) // 2
        assert rank(R) == ell - 2
        assert len(images) == len(braid_arrangement(ell)) - 1


def test_genericity():
    assert is_generic(graphic_arrangement(C(4)))
    assert not is_generic(graphic_arrangement(K(4)))
    # the only dependent flat of the triangle is its center, which is excluded
    assert is_generic(graphic_arrangement(K(3)))
    assert not is_generic(graphic_arrangement(standard_graph("path", 4)))


def test_terao_b_on_triangle():
    tb = terao_b(graphic_arrangement(K(3)), (1, 2))
    assert tb.polynomial == x(2, 3) - x(3, 3)
    assert tb.degree == 1 == len(tb.arrangement) - tb.restricted_size


@pytest.mark.parametrize("ell", [6, 7, 8])
def test_terao_b_degrees_on_deletion_family(ell):
    for j in range(1, ell - 2):
        assert terao_b(b_family(1, j, ell), (j + 1, j + 2)).degree == ell - 3
    assert terao_b(b_family(1, ell - 1, ell), (1, ell)).degree == ell - 4


def test_terao_b_divides_quotient():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(3, 6)
        G = Graph.from_edges(n, [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.6])
        if not G.edges:
            continue
        e = rng.choice(G.sorted_edges())
        A = graphic_arrangement(G)
        tb = terao_b(A, e)
        Qprime = defining_polynomial(tb.arrangement)
        assert Qprime.exact_div(tb.polynomial) * tb.polynomial == Qprime


def test_saito_examples():
    for ell in range(4, 8):
        assert saito_check([theta(i, ell) for i in range(ell)], braid_arrangement(ell))
    A = graphic_arrangement(K(3))
    assert not saito_check([theta(0, 3), theta(0, 3), theta(2, 3)], A)
    assert not saito_check([theta(0, 3), theta(0, 3), theta(2, 3)], A, method="expand")


def test_saito_rejects_derivation_outside_module():
    A = graphic_arrangement(K(3))
    bad = Derivation.partial(1, Polynomial.one(3))
    assert not is_in_d(bad, A)
    with pytest.raises(PreconditionError, match="edge"):
        saito_check([theta(0, 3), theta(1, 3), bad], A)


def test_derivation_module_generator_degrees():
    assert sorted(derivation_module(graphic_arrangement(K(3))).degrees) == [0, 1, 2]
    degs = sorted(derivation_module(graphic_arrangement(standard_graph("antihole", 6))).degrees)
    assert degs == [0, 1, 2] + [3] * 7
    assert derivation_module(graphic_arrangement(standard_graph("edgeless", 4))).degrees == [0] * 4


def test_cycle_kernel_generators_satisfy_constraints():
    A = graphic_arrangement(C(4))
    gens = derivation_generators(A, method="general")
    assert gens and all(is_in_d(g, A) for g in gens)
    # the Euler derivation and theta0 lie in the span
    assert any(g.degree == 0 for g in gens)


@pytest.mark.parametrize("G", [C(4), C(5), standard_graph("antihole", 6), K(4), standard_graph("path", 5)])
def test_general_path_matches_essential_path(G):
    A = graphic_arrangement(G)
    assert betti_arrangement(A, method="general") == betti_arrangement(A, method="essential")


def test_essential_path_refuses_non_central_forms():
    B = Arrangement.from_forms([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    with pytest.raises(PreconditionError):
        derivation_generators(B, method="essential")
    assert betti_arrangement(B) == {(0, 1): 1, (0, 2): 3, (1, 3): 1}


def test_resolution_of_triangle_is_free():
    res = resolve_derivation_module(graphic_arrangement(K(3)))
    assert res.pd == 0
    assert res.betti() == {(0, 0): 1, (0, 1): 1, (0, 2): 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_chordal_graphs_are_free(n):
    for G in enumerate_graphs(n):
        if is_chordal(G):
            assert pd_graph(G) == 0


@pytest.mark.parametrize("ell", range(4, 8))
def test_cycle_pd(ell):
    assert pd_graph(C(ell)) == ell - 3


def test_betti_graph_relabel_invariant():
    G = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)])
    H = Graph.from_edges(5, [(5, 4), (4, 3), (3, 2), (2, 1), (1, 5), (5, 3)])
    assert betti_graph(G) == betti_graph(H) == betti_graph(G, use_cache=False)


@pytest.mark.parametrize("G", [C(5), C(6), standard_graph("antihole", 6),
                               Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (1, 5)])])
def test_localization_does_not_raise_pd(G):
    A = graphic_arrangement(G)
    pd = pd_graph(G)
    for X in flats(A):
        L = localization(A, X)
        assert pd_arrangement(L) <= pd


def test_hilbert_oracle_examples():
    forms = graphic_arrangement(K(3)).forms
    assert hilbert_oracle(forms, 3, 0) == 1
    assert hilbert_oracle(forms, 3, 1) == 4
    for d in range(4):
        assert hilbert_oracle([], 3, d) == free_dimension(3, d)
    with pytest.raises(ValueError):
        hilbert_oracle(forms, 3, -1)


@pytest.mark.parametrize("G", [K(3), C(4), C(5), standard_graph("antihole", 6)])
def test_hilbert_oracle_matches_resolution(G):
    A = graphic_arrangement(G)
    b = betti_graph(G)
    for d in range(6):
        assert b.hilbert_function(d, G.n) == hilbert_oracle(A.forms, G.n, d)


def test_hilbert_oracle_non_difference_forms():
    forms = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    b = betti_arrangement(Arrangement.from_forms(forms))
    for d in range(5):
        assert b.hilbert_function(d, 3) == hilbert_oracle(forms, 3, d)


def test_theta0_is_everywhere():
    for ell in range(2, 6):
        assert is_in_d(theta0(ell), braid_arrangement(ell))


def test_derivation_application():
    ell = 4
    th = theta(1, ell)
    f = product([x(1, ell) - x(2, ell), x(3, ell)], ell)
    # the Euler derivation multiplies a homogeneous polynomial by its degree
    assert th(f) == f.scale(2)
