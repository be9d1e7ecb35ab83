import json
import random

import pytest

from graphic_pd.arrangement import graphic_arrangement, pd_graph, restrict_polynomial, terao_b
from graphic_pd.families import b_family, phi
from graphic_pd.graphs import Graph, enumerate_graphs, is_weakly_chordal, standard_graph
from graphic_pd.pipeline import (
    SCHEMA,
    b_sequence_check,
    classify,
    consistent,
    cycle_genericity,
    l2_free_combinatorial,
    nu_independence,
    predicted_pd,
    suite_antihole,
    suite_hilbert,
    suite_terao,
    verify_wc_pipeline,
)
from graphic_pd.search import has_long_hole, load_checkpoint, search_counterexamples


def test_classify_examples():
    r = classify(standard_graph("cycle", 4))
    assert (r["chordal"], r["weakly_chordal"], r["predicted_pd"]) == (False, True, "1")
    assert sorted(r["witness_cycle"]) == [1, 2, 3, 4]
    r = classify(standard_graph("antihole", 6))
    assert (r["weakly_chordal"], r["predicted_pd"]) == (False, ">=2")
    assert r["witness_in_complement"]
    r = classify(standard_graph("complete", 5))
    assert (r["chordal"], r["predicted_pd"], r["witness_cycle"]) == (True, "0", None)
    assert r["schema"] == SCHEMA
    assert json.loads(json.dumps(r)) == r


@pytest.mark.parametrize("n", range(1, 6))
def test_computed_pd_never_contradicts_prediction(n):
    for G in enumerate_graphs(n):
        assert consistent(pd_graph(G), predicted_pd(G))


def test_pipeline_on_small_graphs():
    rep = verify_wc_pipeline(standard_graph("cycle", 4))
    assert rep.ok
    (step,) = rep.details["steps"]
    assert step["surjective"] and step["hypothesis_L2_free"]
    rep = verify_wc_pipeline(standard_graph("complete", 4))
    assert rep.ok and rep.details["steps"] == []


def test_pipeline_all_weakly_chordal_six():
    for G in enumerate_graphs(6):
        if is_weakly_chordal(G):
            rep = verify_wc_pipeline(G, check_b=False)
            assert rep.ok, (G, rep.failures())


def test_deletion_step_in_braid_family():
    ell, j = 6, 3
    A = b_family(1, j, ell)
    h0 = (j + 1, j + 2)
    rep = b_sequence_check(A, h0)
    assert rep.degree_ok and rep.contained and rep.surjective
    form = A.hyperplane(h0)
    Bbar = restrict_polynomial(terao_b(A, h0).polynomial, form)
    image = restrict_polynomial(phi(j + 1, ell).apply_linear(form), form)
    quotient = image.exact_div(Bbar)
    assert quotient.is_constant() and quotient


def test_l2_free_combinatorial_matches_algebra():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(3, 6)
        G = Graph.from_edges(n, [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.5])
        if not G.edges:
            continue
        e = rng.choice(G.sorted_edges())
        rep = b_sequence_check(graphic_arrangement(G), e, check_theorem=False)
        assert rep.hypothesis_l2_free == l2_free_combinatorial(G, e)


def test_nu_independence_random():
    rng = random.Random(0)
    done = 0
    while done < 50:
        n = rng.randint(3, 6)
        G = Graph.from_edges(n, [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.6])
        if not G.edges:
            continue
        assert nu_independence(graphic_arrangement(G), rng.choice(G.sorted_edges()), seed=done)
        done += 1


def test_small_suites():
    assert suite_antihole((6,)).ok
    assert suite_hilbert(count=4, max_n=5, max_degree=4, seed=2).ok
    assert suite_terao(count=5, max_n=5, seed=3).ok
    assert cycle_genericity(range(4, 6)).ok


def test_long_hole_filter():
    assert has_long_hole(standard_graph("cycle", 6), 6)
    assert has_long_hole(standard_graph("antihole", 6), 6)
    assert not has_long_hole(standard_graph("cycle", 5), 6)
    assert not has_long_hole(standard_graph("complete", 7), 6)


@pytest.mark.parametrize("n", [4, 6])
def test_search_has_no_hits_below_seven(n):
    assert search_counterexamples(n) == []


def test_search_checkpoint_resume(tmp_path):
    path = tmp_path / "ck.jsonl"
    first = search_counterexamples(5, min_pd=1, resume=str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 34
    # truncate, add a torn record, and resume
    path.write_text("\n".join(lines[:10]) + '\n{"key": "Dh')
    second = search_counterexamples(5, min_pd=1, resume=str(path))
    assert second == first
    assert len(load_checkpoint(str(path))) == 34
    assert all(h["pd"] >= 1 for h in first) and first
