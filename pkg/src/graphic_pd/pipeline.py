"""Classification reports, the deletion-sequence check and verification suites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .arrangement import (
    Arrangement,
    derivation_generators,
    flats,
    form_polynomial,
    graphic_arrangement,
    is_generic,
    localization,
    pd_arrangement,
    pd_graph,
    betti_graph,
    rank,
    restrict_polynomial,
    terao_b,
)
from .families import (
    Report,
    antihole_explicit,
    b_family,
    expected_antihole_betti,
    saito_braid,
    saito_freedeletion,
    verify_cj,
    verify_esp,
)
from .graphs import (
    Graph,
    completion_sequence,
    enumerate_graphs,
    find_induced_cycle,
    induced_subgraph,
    is_chordal,
    is_weakly_chordal,
    standard_graph,
    weak_chordality_witness,
)
from .groebner import ideal_groebner_basis, ideal_membership
from .poly import DivisibilityError

SCHEMA = "graphic-pd/1"


def predicted_pd(G: Graph) -> str:
    """Bracket forced by the chordal and weakly chordal characterizations."""
    if is_chordal(G):
        return "0"
    if is_weakly_chordal(G):
        return "1"
    return ">=2"


def consistent(pd: int, bracket: str) -> bool:
    return pd >= 2 if bracket == ">=2" else pd == int(bracket)


def classify(G: Graph, with_pd: bool = False) -> dict:
    witness = weak_chordality_witness(G)
    chordal_cycle = None if is_chordal(G) else find_induced_cycle(G, 4)
    out = {
        "schema": SCHEMA,
        "graph": {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]},
        "chordal": chordal_cycle is None,
        "weakly_chordal": witness is None,
        "predicted_pd": predicted_pd(G),
        "witness_cycle": None,
        "witness_in_complement": False,
    }
    if witness is not None:
        out["witness_cycle"], out["witness_in_complement"] = list(witness[0]), witness[1]
    elif chordal_cycle is not None:
        out["witness_cycle"] = list(chordal_cycle)
    if with_pd:
        b = betti_graph(G)
        out["pd"] = b.projective_dimension
        out["betti"] = b.to_dict()["betti"]
        out["consistent"] = consistent(out["pd"], out["predicted_pd"])
    return out


# -- deletion sequence ---------------------------------------------------------------
@dataclass
class BSequenceReport:
    h0: tuple
    degree_ok: bool
    contained: bool
    surjective: bool
    witness: Optional[int]
    hypothesis_l2_free: bool
    hypothesis_pd_le_1: Optional[bool]
    hypothesis_theorem: Optional[bool]
    deg_b: int
    n_generators: int
    notes: list = field(default_factory=list)

    @property
    def corollary_hypothesis(self) -> Optional[bool]:
        if self.hypothesis_pd_le_1 is None:
            return None
        return self.hypothesis_l2_free and self.hypothesis_pd_le_1

    def to_dict(self):
        return {
            "h0": list(self.h0),
            "deg_B": self.deg_b,
            "degree_ok": self.degree_ok,
            "contained": self.contained,
            "surjective": self.surjective,
            "witness_generator": self.witness,
            "hypothesis_corollary": self.corollary_hypothesis,
            "hypothesis_L2_free": self.hypothesis_l2_free,
            "hypothesis_pd_le_1": self.hypothesis_pd_le_1,
            "hypothesis_theorem": self.hypothesis_theorem,
        }


def _pd_of(A: Arrangement) -> int:
    if A.graph is not None:
        return pd_graph(A.graph)
    return pd_arrangement(A)


def flats_over(A: Arrangement, h0_index: int, min_codim: int) -> list:
    """Flats of A contained in H0 with codim_V >= min_codim (these are the flats of A^{H0})."""
    return [X for X in flats(A) if h0_index in X.hyperplanes and X.codim >= min_codim]


def b_sequence_check(A: Arrangement, h0, check_theorem: bool = True, nu_rule="lex_min") -> BSequenceReport:
    """Image of D(A') -> S/(alpha_H0) against the principal ideal of the reduced B.

    Surjective means the images theta(alpha) mod alpha of the generators of
    D(A') generate (B mod alpha).  Both sufficient conditions are reported:
    the corollary form (every A_X free for X in L_2(A^{H0}), and pd(A) <= 1)
    and the theorem form (pd(A_X) < codim_V(X) - 2 for X in L_{>=2}(A^{H0})).
    """
    form = A.hyperplane(h0)
    k0 = A.index(form)
    tb = terao_b(A, form, nu_rule)
    Aprime = tb.arrangement
    degree_ok = tb.degree == len(Aprime) - tb.restricted_size
    Bbar = restrict_polynomial(tb.polynomial, form)
    gens = derivation_generators(Aprime)
    images = [restrict_polynomial(g.apply_linear(form), form) for g in gens]
    contained = True
    witness = None
    for n, img in enumerate(images):
        if not img:
            continue
        try:
            q = img.exact_div(Bbar)
        except DivisibilityError:
            contained = False
            continue
        if witness is None and q.is_constant():
            witness = n
    nz = [img for img in images if img]
    surjective = contained and bool(nz) and ideal_membership(Bbar, nz).member
    l2 = flats_over(A, k0, 3)
    l2_free = all(_pd_of(localization(A, X)) == 0 for X in l2 if X.codim == 3)
    hyp_pd = None
    hyp_thm = None
    if check_theorem:
        pdA = _pd_of(A)
        hyp_pd = pdA <= 1
        hyp_thm = all(_pd_of(localization(A, X)) < X.codim - 2 for X in l2)
    return BSequenceReport(form, degree_ok, contained, surjective, witness, l2_free, hyp_pd, hyp_thm,
                           tb.degree, len(gens))


def l2_free_combinatorial(G: Graph, e) -> bool:
    """Every 4-vertex induced subgraph of G containing the edge e is chordal."""
    u, v = e
    rest = [w for w in G.vertices if w not in (u, v)]
    for a, b in combinations(rest, 2):
        H, _ = induced_subgraph(G, [u, v, a, b])
        if not is_chordal(H):
            return False
    return True


def verify_wc_pipeline(G: Graph, check_b: bool = True) -> Report:
    """Walk a completion sequence backwards, checking each deletion step."""
    seq = completion_sequence(G)
    rep = Report()
    graphs = seq.graphs()  # G_0 = G, ..., G_k chordal
    rep.record("sequence_valid", not seq.verify(), seq.verify() or None)
    steps = []
    for j in range(len(seq.added), 0, -1):
        Gj = graphs[j]
        e = seq.added[j - 1]
        comb_ok = l2_free_combinatorial(Gj, e)
        step = {"edge": list(e), "l2_free_combinatorial": comb_ok}
        if check_b:
            br = b_sequence_check(graphic_arrangement(Gj), e)
            step.update(br.to_dict())
            rep.record(f"step_{j}_surjective", br.surjective)
            rep.record(f"step_{j}_degree", br.degree_ok)
            rep.record(f"step_{j}_hypothesis_agrees", br.hypothesis_l2_free == comb_ok)
        rep.record(f"step_{j}_l2_free", comb_ok)
        steps.append(step)
    pd = pd_graph(G)
    rep.record("pd_le_1", pd <= 1, pd)
    rep.details["steps"] = steps
    rep.details["sequence"] = [list(e) for e in seq.added]
    return rep


def nu_independence(A: Arrangement, h0, rules=("lex_min", "lex_max", "random"), seed=0) -> bool:
    """(alpha_H0, B) gives the same reduced Groebner basis for every nu-rule."""
    rng = random.Random(seed)
    bases = []
    form = A.hyperplane(h0)
    for rule in rules:
        if rule == "random":
            rule = lambda cands: rng.choice(cands)  # noqa: E731
        tb = terao_b(A, form, rule)
        bases.append(ideal_groebner_basis([form_polynomial(form), tb.polynomial]))
    return all(b == bases[0] for b in bases)


# -- suites -------------------------------------------------------------------------
def suite_main_theorem(max_n: int = 6, workers: int = 1) -> Report:
    from .search import prefetch_betti

    rep = Report()
    for n in range(1, max_n + 1):
        classes = list(enumerate_graphs(n))
        prefetch_betti(classes, workers)
        for G in classes:
            b = betti_graph(G)
            pd = b.projective_dimension
            ch, wc = is_chordal(G), is_weakly_chordal(G)
            name = f"n{n}:{G.sorted_edges()}"
            rep.record(name + ":free_iff_chordal", (pd == 0) == ch, pd)
            rep.record(name + ":pd_le_1_iff_wc", (pd <= 1) == wc, pd)
            if wc and not ch:
                rep.record(name + ":pd_eq_1", pd == 1, pd)
            rep.record(name + ":rank_sum", b.euler_rank() == n, b)
            cyc = find_longest_induced_cycle(G)
            if cyc:
                rep.record(name + ":cycle_bound", pd >= cyc - 3, (pd, cyc))
    return rep


def find_longest_induced_cycle(G: Graph) -> int:
    best = 0
    m = 3
    while m <= G.n:
        c = find_induced_cycle(G, m)
        if c is None:
            break
        best = len(c)
        m = best + 1
    return best


def suite_antihole(ells=(6, 7)) -> Report:
    rep = Report()
    for ell in ells:
        b = betti_graph(standard_graph("antihole", ell))
        rep.record(f"antihole{ell}:betti", b == expected_antihole_betti(ell), b)
        rep.record(f"antihole{ell}:pd", b.projective_dimension == 2, b.projective_dimension)
    return rep


def suite_saito(ells=range(4, 10)) -> Report:
    rep = Report()
    for ell in ells:
        rep.record(f"braid{ell}", saito_braid(ell))
        if ell >= 6:
            for i in range(1, ell + 1):
                rep.record(f"freedeletion{ell}:{i}", saito_freedeletion(i, ell))
    return rep


def suite_identities(ells=range(6, 10)) -> Report:
    rep = Report()
    for ell in ells:
        for i in range(1, ell + 1):
            rep.record(f"esp{ell}:{i}", verify_esp(i, ell))
        for j in range(1, ell - 2):
            rep.record(f"cj{ell}:{j}", verify_cj(j, ell))
    return rep


def suite_b_sequence(max_n: int = 5) -> Report:
    rep = Report()
    for n in range(1, max_n + 1):
        for G in enumerate_graphs(n):
            if not is_weakly_chordal(G):
                continue
            r = verify_wc_pipeline(G)
            for k, v in r.checks.items():
                rep.record(f"n{n}:{G.sorted_edges()}:{k}", v, r.details.get(k))
    return rep


def suite_explicit(ells=(6, 7)) -> Report:
    rep = Report()
    for ell in ells:
        *_, r = antihole_explicit(ell)
        for k, v in r.checks.items():
            rep.record(f"explicit{ell}:{k}", v, r.details.get(k))
    return rep


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def suite_hilbert(count: int = 20, max_n: int = 6, max_degree: int = 6, seed: int = 0) -> Report:
    """Hilbert function read off the Betti table against direct linear algebra."""
    from .hilbert import hilbert_oracle

    rng = random.Random(seed)
    rep = Report()
    for t in range(count):
        G = random_graph(rng, rng.randint(2, max_n))
        A = graphic_arrangement(G)
        b = betti_graph(G)
        for d in range(max_degree + 1):
            got, want = b.hilbert_function(d, G.n), hilbert_oracle(A.forms, G.n, d)
            rep.record(f"g{t}:{G.sorted_edges()}:d{d}", got == want, (got, want))
    return rep


def suite_terao(count: int = 50, max_n: int = 6, seed: int = 0) -> Report:
    """Degree identity and nu-independence of (alpha_H0, B) on random deletions."""
    rng = random.Random(seed)
    rep = Report()
    t = 0
    while t < count:
        G = random_graph(rng, rng.randint(3, max_n))
        if not G.edges:
            continue
        e = rng.choice(G.sorted_edges())
        A = graphic_arrangement(G)
        tb = terao_b(A, e)
        name = f"g{t}:{G.sorted_edges()}:{e}"
        rep.record(name + ":degree", tb.degree == len(tb.arrangement) - tb.restricted_size, tb.degree)
        rep.record(name + ":nu_independent", nu_independence(A, e, seed=rng.randrange(1 << 30)))
        t += 1
    return rep


def cycle_genericity(ells=range(4, 8)) -> Report:
    rep = Report()
    for ell in ells:
        A = graphic_arrangement(standard_graph("cycle", ell))
        rep.record(f"cycle{ell}:generic", is_generic(A))
        pd = pd_graph(A.graph)
        rep.record(f"cycle{ell}:pd", pd == ell - 3 == rank(A) - 2, pd)
    return rep


SUITES = {
    "main-theorem": suite_main_theorem,
    "antihole": suite_antihole,
    "saito": suite_saito,
    "identities": suite_identities,
    "b-sequence": suite_b_sequence,
    "explicit": suite_explicit,
    "hilbert": suite_hilbert,
    "terao": suite_terao,
    "cycles": cycle_genericity,
}

