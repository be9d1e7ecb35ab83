"""Central hyperplane arrangements over Q, with graphic arrangements as the main case.

A hyperplane is stored as the primitive integer coefficient vector of its
defining linear form, normalized so that the first non-zero entry is
positive; x_i - x_j with i < j is therefore stored as is.
"""

from __future__ import annotations

import math
import random
import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .derivation import Derivation
from .graphs import Graph, canonical_graph, canonical_string, contract_edge
from .groebner import (
    BettiTable,
    FreeModuleElement,
    Presentation,
    Resolution,
    minimal_free_resolution,
    minimal_generators,
    module_kernel,
)
from .linalg import exact_rank
from .poly import DivisibilityError, Polynomial, determinant, numeric_determinant, product


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class ConsistencyError(RuntimeError):
    """An internal identity that must hold did not."""


def normalize_form(form) -> tuple:
    vals = [Fraction(c) for c in form]
    if not any(vals):
        raise PreconditionError("the zero form defines no hyperplane")
    den = 1
    for v in vals:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    lead = next(c for c in ints if c)
    if lead < 0:
        g = -g
    return tuple(c // g for c in ints)


def edge_form(i: int, j: int, ell: int) -> tuple:
    i, j = min(i, j), max(i, j)
    v = [0] * ell
    v[i - 1], v[j - 1] = 1, -1
    return tuple(v)


def form_polynomial(form) -> Polynomial:
    return Polynomial.linear(form)


def _pivot(form) -> int:
    """Index (0-based) of the last non-zero coefficient."""
    return max(k for k, c in enumerate(form) if c)


def restrict_form(form, h0) -> Optional[tuple]:
    """Form restricted to ker(h0), in the coordinates left after removing h0's pivot."""
    p = _pivot(h0)
    c = Fraction(form[p], h0[p])
    vals = [Fraction(a) - c * b for a, b in zip(form, h0)]
    del vals[p]
    if not any(vals):
        return None
    return normalize_form(vals)


def restrict_polynomial(f: Polynomial, h0) -> Polynomial:
    """Image of f in S/(h0), identified with a ring in one fewer variable."""
    ell = len(h0)
    p = _pivot(h0) + 1
    newvars = ell - 1
    if newvars == 0:
        return Polynomial.constant(f.constant_term(), 1)
    idx = {k: (k if k < p else k - 1) for k in range(1, ell + 1) if k != p}
    nz = [k for k, c in enumerate(h0, start=1) if c]
    if len(nz) == 2 and h0[p - 1] == -h0[nz[0] - 1]:
        mapping = dict(idx)
        mapping[p] = idx[nz[0]]
        return f.rename(mapping, newvars)
    coeffs = [0] * newvars
    for k, c in enumerate(h0, start=1):
        if k != p and c:
            coeffs[idx[k] - 1] = Fraction(-c, h0[p - 1])
    values = {k: Polynomial.var(idx[k], newvars) for k in idx}
    values[p] = Polynomial.linear(coeffs)
    return f.substitute(values, newvars)


@dataclass(frozen=True)
class Arrangement:
    """Pairwise non-proportional forms in ``ell`` variables.

    Graphic arrangements carry the graph and the edge behind each form.
    """

    ell: int
    forms: tuple
    graph: Optional[Graph] = None
    edges: Optional[tuple] = None

    def __post_init__(self):
        forms = tuple(normalize_form(f) for f in self.forms)
        if any(len(f) != self.ell for f in forms):
            raise PreconditionError("form length differs from the ambient dimension")
        if len(set(forms)) != len(forms):
            raise PreconditionError("repeated hyperplane")
        object.__setattr__(self, "forms", forms)
        if self.graph is not None:
            edges = tuple(self.edges)
            if len(edges) != len(forms) or len(edges) != len(self.graph.edges):
                raise PreconditionError("graphic arrangement must have one form per edge")
            object.__setattr__(self, "edges", edges)

    @classmethod
    def from_forms(cls, forms, ell=None):
        forms = [tuple(f) for f in forms]
        if ell is None:
            if not forms:
                raise PreconditionError("cannot infer the dimension of an empty arrangement")
            ell = len(forms[0])
        return cls(ell, tuple(forms))

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    @property
    def is_graphic(self) -> bool:
        return self.graph is not None

    def polynomials(self) -> list:
        return [form_polynomial(f) for f in self.forms]

    def index(self, form) -> int:
        try:
            return self.forms.index(normalize_form(form))
        except ValueError:
            raise PreconditionError(f"hyperplane {form} is not in the arrangement") from None

    def hyperplane(self, h) -> tuple:
        """Normalize a hyperplane given by form, edge (i, j) or index."""
        if isinstance(h, int):
            return self.forms[h]
        h = tuple(h)
        looks_like_edge = (len(h) == 2 and all(isinstance(v, int) and 1 <= v <= self.ell for v in h)
                           and h[0] != h[1])
        if looks_like_edge and (self.graph is not None or self.ell != 2):
            return edge_form(h[0], h[1], self.ell)
        return normalize_form(h)

    def subarrangement(self, indices) -> "Arrangement":
        indices = sorted(indices)
        if self.graph is not None:
            edges = tuple(self.edges[k] for k in indices)
            return Arrangement(self.ell, tuple(self.forms[k] for k in indices),
                               Graph.from_edges(self.ell, edges), edges)
        return Arrangement(self.ell, tuple(self.forms[k] for k in indices))

    def delete(self, h) -> "Arrangement":
        k = self.index(self.hyperplane(h))
        return self.subarrangement([i for i in range(len(self)) if i != k])

    def add(self, h) -> "Arrangement":
        form = self.hyperplane(h)
        if form in self.forms:
            raise PreconditionError(f"hyperplane {form} already present")
        if self.graph is not None and _as_edge(form) is not None:
            e = _as_edge(form)
            return graphic_arrangement(self.graph.add_edge(*e))
        return Arrangement(self.ell, self.forms + (form,))


def _as_edge(form):
    nz = [k for k, c in enumerate(form, start=1) if c]
    if len(nz) == 2 and form[nz[0] - 1] == 1 and form[nz[1] - 1] == -1:
        return tuple(nz)
    return None


def graphic_arrangement(G: Graph) -> Arrangement:
    edges = tuple(G.sorted_edges())
    return Arrangement(G.n, tuple(edge_form(i, j, G.n) for i, j in edges), G, edges)


def braid_arrangement(ell: int) -> Arrangement:
    from .graphs import standard_graph
    return graphic_arrangement(standard_graph("complete", ell))


def defining_polynomial(A: Arrangement) -> Polynomial:
    """Q(A), multiplying forms grouped by their last variable (keeps products sparse)."""
    forms = sorted(A.forms, key=lambda f: (_pivot(f), f))
    return product([form_polynomial(f) for f in forms], A.ell)


def _rank_union_find(A: Arrangement) -> int:
    parent = list(range(A.ell + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    r = 0
    for i, j in A.edges:
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)
            r += 1
    return r


def rank(A: Arrangement) -> int:
    r = exact_rank(A.forms)
    if A.graph is not None:
        uf = _rank_union_find(A)
        if uf != r:  # pragma: no cover
            raise ConsistencyError(f"graphic rank {uf} disagrees with linear rank {r}")
    return r


# -- intersection lattice -------------------------------------------------------
@dataclass(frozen=True)
class Flat:
    """A flat X in L(A): the set of hyperplanes containing it, and its codimension.

    For graphic arrangements ``partition`` lists the blocks of coordinates
    that are equal on X.
    """

    hyperplanes: frozenset
    codim: int
    partition: Optional[tuple] = None

    def __len__(self):
        return len(self.hyperplanes)


def _flat_from_partition(A: Arrangement, blocks) -> Flat:
    where = {}
    for b, block in enumerate(blocks):
        for v in block:
            where[v] = b
    hyps = frozenset(k for k, (i, j) in enumerate(A.edges) if where[i] == where[j])
    blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
    return Flat(hyps, A.ell - len(blocks), blocks)


def _connected_in(G: Graph, block) -> bool:
    block = set(block)
    start = min(block)
    seen = {start}
    stack = [start]
    adj = G.adj
    while stack:
        v = stack.pop()
        for w in block:
            if w not in seen and adj[v] >> w & 1:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(block)


def _graphic_flats(A: Arrangement, max_codim: int) -> list:
    G = A.graph
    out = []
    blocks: list = []

    def rec(v, codim):
        if v > A.ell:
            if all(_connected_in(G, b) for b in blocks if len(b) > 1):
                out.append(_flat_from_partition(A, [set(b) for b in blocks]))
            return
        for b in blocks:
            if codim + 1 <= max_codim:
                b.append(v)
                rec(v + 1, codim + 1)
                b.pop()
        blocks.append([v])
        rec(v + 1, codim)
        blocks.pop()

    rec(1, 0)
    out.sort(key=lambda X: (X.codim, X.partition))
    return out


def _closure(A: Arrangement, subset) -> frozenset:
    base = [A.forms[k] for k in subset]
    r = exact_rank(base)
    return frozenset(k for k, f in enumerate(A.forms) if k in subset or exact_rank(base + [f]) == r)


def _general_flats(A: Arrangement, max_codim: int) -> list:
    level = {frozenset()}
    out = [Flat(frozenset(), 0)]
    for c in range(1, max_codim + 1):
        nxt = set()
        for X in level:
            for k in range(len(A)):
                if k not in X:
                    nxt.add(_closure(A, X | {k}))
        nxt = {X for X in nxt if exact_rank([A.forms[k] for k in X]) == c}
        out.extend(Flat(X, c) for X in sorted(nxt, key=sorted))
        level = nxt
        if not level:
            break
    return out


def flats(A: Arrangement, max_codim: Optional[int] = None) -> list:
    """Flats of codimension <= max_codim (default: all), sorted by codimension."""
    if max_codim is None:
        max_codim = A.ell
    if A.graph is not None:
        return _graphic_flats(A, max_codim)
    return _general_flats(A, max_codim)


def flat_of(A: Arrangement, hyperplanes) -> Flat:
    """The flat cut out by the given hyperplane indices (they must form a flat)."""
    hyps = frozenset(hyperplanes)
    if _closure(A, hyps) != hyps:
        raise PreconditionError("hyperplane set is not closed; not a flat of the arrangement")
    c = exact_rank([A.forms[k] for k in hyps])
    part = None
    if A.graph is not None:
        part = _flat_from_partition(A, _components(A.ell, [A.edges[k] for k in hyps])).partition
    return Flat(hyps, c, part)


def _components(ell, edges) -> list:
    parent = list(range(ell + 1))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i, j in edges:
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)
    comps = {}
    for v in range(1, ell + 1):
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


def localization(A: Arrangement, X: Flat) -> Arrangement:
    if _closure(A, X.hyperplanes) != X.hyperplanes:
        raise PreconditionError("not a flat of the arrangement")
    return A.subarrangement(X.hyperplanes)


def restriction(A: Arrangement, h0):
    """A^{H0} in coordinates of H0, plus the map from A' indices to restricted indices.

    For graphic arrangements this is the arrangement of the contracted graph.
    """
    h0 = A.hyperplane(h0)
    k0 = A.index(h0)
    restricted = []
    position = {}
    images = {}
    for k, f in enumerate(A.forms):
        if k == k0:
            continue
        g = restrict_form(f, h0)
        if g is None:  # pragma: no cover - only h0 itself restricts to zero
            continue
        if g not in position:
            position[g] = len(restricted)
            restricted.append(g)
        images[k] = position[g]
    if A.graph is not None:
        e = A.edges[k0]
        H, vmap = contract_edge(A.graph, e)
        R = graphic_arrangement(H)
        remap = {}
        for k, g in enumerate(restricted):
            remap[k] = R.index(g)
        return R, {k: remap[v] for k, v in images.items()}
    return Arrangement(A.ell - 1, tuple(restricted)), images


def is_generic(A: Arrangement) -> bool:
    """|A| > rk(A) and |A_X| == codim(X) for every flat X other than the center."""
    r = rank(A)
    if len(A) <= r:
        return False
    return all(len(X) == X.codim for X in flats(A, r - 1))


# -- Terao's polynomial B -----------------------------------------------------------
@dataclass
class TeraoB:
    arrangement: Arrangement      # A' = A \ {H0}
    h0: tuple
    nu: dict                      # restricted index -> index in A'
    factors: list                 # forms of A' outside the image of nu
    restricted_size: int
    refined: dict = field(default_factory=dict)

    @property
    def polynomial(self) -> Polynomial:
        return product([form_polynomial(f) for f in self.factors], len(self.h0))

    @property
    def degree(self) -> int:
        return len(self.factors)


NU_RULES = ("lex_min", "lex_max")
SYMBOLIC_DIVISION_LIMIT = 16  # above this the expanded cross-check of Q(A) / denominator is skipped


def terao_b(A_full: Arrangement, h0, nu_rule="lex_min", check_division=True) -> TeraoB:
    """B(A', H0) = Q(A) / (alpha_H0 * prod alpha_nu(X)).

    ``nu_rule`` picks, for every hyperplane X of the restriction, one
    hyperplane of A' over it: the lexicographically smallest edge (or
    first stored form) with ``lex_min``, the largest with ``lex_max``, or
    the choice of a callable receiving the sorted candidate indices.
    """
    h0 = A_full.hyperplane(h0)
    k0 = A_full.index(h0)
    Aprime = A_full.delete(h0)
    R, images = restriction(A_full, h0)
    over = {}
    for k, x in images.items():
        kp = k if k < k0 else k - 1
        over.setdefault(x, []).append(kp)
    nu = {}
    for x, cands in over.items():
        if Aprime.edges is not None:
            cands = sorted(cands, key=lambda kp: Aprime.edges[kp])
        else:
            cands = sorted(cands)
        if nu_rule == "lex_min":
            nu[x] = cands[0]
        elif nu_rule == "lex_max":
            nu[x] = cands[-1]
        elif callable(nu_rule):
            nu[x] = nu_rule(cands)
            if nu[x] not in cands:
                raise PreconditionError("nu must map X to a hyperplane over X")
        else:
            raise PreconditionError(f"unknown nu rule {nu_rule!r}")
    chosen = set(nu.values())
    factors = [f for kp, f in enumerate(Aprime.forms) if kp not in chosen]
    tb = TeraoB(Aprime, h0, nu, factors, len(R))
    if tb.degree != len(Aprime) - len(R):
        raise ConsistencyError("deg B differs from |A'| - |A''|")
    if check_division:
        # Q(A) is a product of pairwise non-associate linear forms, so exact
        # division is multiset containment of normalized factors
        remaining = Counter(A_full.forms)
        for f in [h0] + [Aprime.forms[k] for k in sorted(chosen)]:
            if not remaining[f]:
                raise ConsistencyError("Q(A) not divisible by the nu-product")
            remaining[f] -= 1
        if sorted(remaining.elements()) != sorted(factors):  # pragma: no cover
            raise ConsistencyError("quotient differs from the complementary product")
    if check_division and len(A_full) <= SYMBOLIC_DIVISION_LIMIT:
        denom = product([form_polynomial(h0)] + [form_polynomial(Aprime.forms[k]) for k in sorted(chosen)],
                        A_full.ell)
        try:
            quotient = defining_polynomial(A_full).exact_div(denom)
        except DivisibilityError as exc:  # pragma: no cover
            raise ConsistencyError("Q(A) not divisible by the nu-product") from exc
        if quotient != tb.polynomial:  # pragma: no cover
            raise ConsistencyError("quotient differs from the complementary product")
    return tb


# -- derivation modules -----------------------------------------------------------
def is_in_d(theta: Derivation, A: Arrangement) -> bool:
    return violated_hyperplane(theta, A) is None


def violated_hyperplane(theta: Derivation, A: Arrangement):
    if theta.ell != A.ell:
        raise PreconditionError("derivation and arrangement live in different dimensions")
    for k, f in enumerate(A.forms):
        if restrict_polynomial(theta.apply_linear(f), f):
            return k
    return None


def saito_check(derivs, A: Arrangement, method: str = "restrict") -> bool:
    """det of the coefficient matrix equals c*Q(A) with c a non-zero rational.

    ``expand`` multiplies everything out and compares with Q(A).  The
    default ``restrict`` avoids the expansion: the determinant of
    homogeneous derivations is homogeneous of degree sum(deg theta_k); it
    is non-zero if it is non-zero at some rational point, and it is
    divisible by alpha_H exactly when the restricted matrix modulo alpha_H
    is singular.  The forms being pairwise coprime, a non-zero determinant
    of degree |A| divisible by every alpha_H is a scalar multiple of Q(A).
    """
    derivs = list(derivs)
    if len(derivs) != A.ell:
        raise PreconditionError(f"need exactly {A.ell} derivations, got {len(derivs)}")
    for n, theta in enumerate(derivs):
        k = violated_hyperplane(theta, A)
        if k is not None:
            name = f"edge {A.edges[k]}" if A.edges else f"form {A.forms[k]}"
            raise PreconditionError(f"derivation #{n} is not in D(A): fails on {name}")
    M = [[d.coeffs[r] for d in derivs] for r in range(A.ell)]
    if method == "expand":
        det = determinant(M)
        if not det:
            return False
        Q = defining_polynomial(A)
        if det.degree != Q.degree:
            return False
        c = Fraction(det.lc()) / Fraction(Q.lc())
        return det == Q.scale(c)
    if method != "restrict":
        raise PreconditionError(f"unknown method {method!r}")
    if any(d.is_zero() for d in derivs):
        return False
    if sum(d.degree for d in derivs) != len(A):
        return False
    rng = random.Random(len(A) * 1000003 + A.ell)
    nonzero = False
    for _ in range(8):
        point = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(A.ell)]
        if numeric_determinant(M, point):
            nonzero = True
            break
    if not nonzero:
        return bool(determinant(M)) and saito_check(derivs, A, "expand")
    for f in A.forms:
        R = [[restrict_polynomial(e, f) for e in row] for row in M]
        if determinant(R):
            return False
    return True


def _kernel_generators(forms, nvars) -> list:
    """Generators of {theta in S^nvars : alpha | theta(alpha) for every form}."""
    m = len(forms)
    zeros = (0,) * m
    cols = []
    for k in range(nvars):
        comps = tuple(Polynomial.constant(f[k], nvars) for f in forms)
        cols.append(FreeModuleElement(comps, zeros))
    for h, f in enumerate(forms):
        comps = [Polynomial.zero(nvars)] * m
        comps[h] = -form_polynomial(f)
        cols.append(FreeModuleElement(tuple(comps), zeros))
    ker = module_kernel(cols, (0,) * nvars + (1,) * m, nvars, zeros, minimal=False)
    shifts = (0,) * nvars
    thetas = [FreeModuleElement(g.components[:nvars], shifts) for g in ker.generators]
    return minimal_generators([t for t in thetas if not t.is_zero()], nvars, shifts)


def _essential_forms(A: Arrangement):
    """Forms in y_k = x_k - x_ell (k < ell) when every form kills (1, ..., 1)."""
    if A.ell < 2 or any(sum(f) for f in A.forms):
        return None
    return [f[:-1] for f in A.forms]


def _lift_essential(elem: FreeModuleElement, ell: int) -> Derivation:
    subs = {k: Polynomial.var(k, ell) - Polynomial.var(ell, ell) for k in range(1, ell)}
    coeffs = [c.substitute(subs, ell) for c in elem.components] + [Polynomial.zero(ell)]
    return Derivation(tuple(coeffs))


def theta0(ell: int) -> Derivation:
    return Derivation(tuple(Polynomial.one(ell) for _ in range(ell)))


def derivation_generators(A: Arrangement, method="auto") -> list:
    """A minimal homogeneous generating set of D(A) as Derivations, by degree."""
    ell = A.ell
    if not A.forms:
        return [Derivation.partial(k, Polynomial.one(ell)) for k in range(1, ell + 1)]
    ess = _essential_forms(A) if method in ("auto", "essential") else None
    if method == "essential" and ess is None:
        raise PreconditionError("arrangement is not a product with a line")
    if ess is not None:
        gens = _kernel_generators(ess, ell - 1) if ell > 1 else []
        out = [theta0(ell)] + [_lift_essential(g, ell) for g in gens]
    else:
        out = [Derivation.from_element(g) for g in _kernel_generators(A.forms, ell)]
    out.sort(key=lambda d: d.degree)
    return out


def derivation_module(A: Arrangement, method="auto") -> Presentation:
    gens = derivation_generators(A, method)
    return Presentation([g.to_element() for g in gens], A.ell, (0,) * A.ell)


@dataclass
class DerivationResolution:
    """Minimal resolution data for D(A).

    When the arrangement splits off the line spanned by (1, ..., 1) the
    resolution is computed for the essential part in one fewer variable and
    ``extra`` records the free summand S*theta_0.
    """

    resolution: Resolution
    extra: dict

    def betti(self) -> BettiTable:
        return self.resolution.betti().shifted(self.extra)

    @property
    def pd(self) -> int:
        return self.betti().projective_dimension


def resolve_derivation_module(A: Arrangement, method="auto", max_length=None) -> DerivationResolution:
    ell = A.ell
    limit = max(ell - 2, 0) if max_length is None else max_length
    ess = _essential_forms(A) if method in ("auto", "essential") and A.forms else None
    if ess is not None and ell > 1:
        shifts = (0,) * (ell - 1)
        gens = _kernel_generators(ess, ell - 1)
        res = minimal_free_resolution(Presentation(gens, ell - 1, shifts), limit)
        return DerivationResolution(res, {(0, 0): 1})
    P = derivation_module(A, "general" if method == "auto" else method)
    res = minimal_free_resolution(P, limit)
    return DerivationResolution(res, {})


def betti_arrangement(A: Arrangement, method="auto") -> BettiTable:
    return resolve_derivation_module(A, method).betti()


def pd_arrangement(A: Arrangement, method="auto") -> int:
    return betti_arrangement(A, method).projective_dimension


# Betti tables of graphic arrangements, keyed by canonical graph string.
_BETTI_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def betti_graph(G: Graph, use_cache=True) -> BettiTable:
    key = canonical_string(G)
    if use_cache:
        with _CACHE_LOCK:
            hit = _BETTI_CACHE.get(key)
        if hit is not None:
            return hit
    b = betti_arrangement(graphic_arrangement(canonical_graph(G)))
    if use_cache:
        with _CACHE_LOCK:
            _BETTI_CACHE[key] = b
    return b


def pd_graph(G: Graph, use_cache=True) -> int:
    return betti_graph(G, use_cache).projective_dimension


def clear_cache():
    with _CACHE_LOCK:
        _BETTI_CACHE.clear()


def seed_cache(entries):
    """Preload canonical-string -> BettiTable pairs (e.g. from a checkpoint)."""
    with _CACHE_LOCK:
        _BETTI_CACHE.update(entries)
