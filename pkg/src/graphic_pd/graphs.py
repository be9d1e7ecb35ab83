"""Finite simple graphs on vertices 1..n and their chordality classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional


class GraphError(ValueError):
    """Invalid graph parameters or arguments."""


class ClassificationError(ValueError):
    """A graph fails a required chordality class; carries a witness cycle."""

    def __init__(self, message, cycle=None, in_complement=False):
        super().__init__(message)
        self.cycle = cycle
        self.in_complement = in_complement


def _edge(u, v):
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Edges are stored as sorted pairs (i, j), i < j."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {e} has a vertex outside 1..{self.n}")
            norm.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n, edges):
        return cls(n, frozenset(_edge(u, v) for u, v in edges))

    @cached_property
    def adj(self) -> tuple:
        """Adjacency bitmasks; bit v of adj[u] is set iff uv is an edge (index 0 unused)."""
        a = [0] * (self.n + 1)
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v) -> list:
        m = self.adj[v]
        return [u for u in self.vertices if m >> u & 1]

    def degree(self, v) -> int:
        return bin(self.adj[v]).count("1")

    def __len__(self):
        return self.n

    def __str__(self):
        es = ",".join(f"{u}{'' if self.n < 10 else '-'}{v}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, edges={{{es}}})"

    def add_edge(self, u, v) -> "Graph":
        e = _edge(u, v)
        if e in self.edges:
            raise GraphError(f"edge {e} already present")
        return Graph(self.n, self.edges | {e})

    def components(self) -> list:
        seen = 0
        comps = []
        for v in self.vertices:
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(sorted(_bits(comp)))
        return comps


def _bits(mask) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- standard graphs ------------------------------------------------------------
def standard_graph(kind: str, n: int) -> Graph:
    minimum = {"complete": 1, "edgeless": 1, "path": 1, "cycle": 3, "antihole": 6}
    if kind not in minimum:
        raise GraphError(f"unknown graph kind {kind!r}")
    if n < minimum[kind]:
        raise GraphError(f"{kind} graph needs n >= {minimum[kind]}, got {n}")
    if kind == "complete":
        return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))
    if kind == "edgeless":
        return Graph(n)
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    cycle = Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if kind == "cycle":
        return cycle
    return complement(cycle)


def complement(G: Graph) -> Graph:
    return Graph(G.n, frozenset(e for e in itertools.combinations(G.vertices, 2)
                                if e not in G.edges))


def induced_subgraph(G: Graph, S):
    """Induced subgraph on S relabelled to 1..|S| in increasing order.

    Returns (graph, relabel) where relabel maps old vertex -> new vertex.
    """
    S = sorted(set(S))
    if not S:
        raise GraphError("induced subgraph on an empty vertex set")
    if S[0] < 1 or S[-1] > G.n:
        raise GraphError("vertex set not contained in the graph")
    relabel = {v: i + 1 for i, v in enumerate(S)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph.from_edges(len(S), edges), relabel


def delete_edge(G: Graph, e) -> Graph:
    e = _edge(*e)
    if e not in G.edges:
        raise GraphError(f"{e} is not an edge")
    return Graph(G.n, G.edges - {e})


def contract_edge(G: Graph, e):
    """Identify the endpoints of e; returns (graph on n-1 vertices, vertex map)."""
    e = _edge(*e)
    if e not in G.edges:
        raise GraphError(f"{e} is not an edge")
    a, b = e
    vmap = {v: (a if v == b else (v if v < b else v - 1)) for v in G.vertices}
    edges = set()
    for u, v in G.edges:
        pu, pv = vmap[u], vmap[v]
        if pu != pv:
            edges.add(_edge(pu, pv))
    return Graph(G.n - 1, frozenset(edges)), vmap


# -- chordless cycles -------------------------------------------------------------
def is_chordless_cycle(G: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if G.has_edge(cycle[a], cycle[b]) != consecutive:
                return False
    return True


def find_induced_cycle(G: Graph, min_len: int) -> Optional[list]:
    """Some chordless cycle with at least ``min_len`` vertices, or None.

    Depth-first search over chordless paths whose first vertex is the
    smallest vertex of the cycle.
    """
    if min_len < 3:
        raise GraphError("min_len must be at least 3")
    adj = G.adj
    for start in G.vertices:
        higher = ~((1 << (start + 1)) - 1)
        for second in _bits(adj[start] & higher):
            # blocked: path vertices and neighbours of interior path vertices
            stack = [([start, second], (1 << start) | (1 << second))]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                for w in _bits(adj[last] & higher & ~blocked):
                    if adj[w] >> start & 1:
                        if len(path) + 1 >= min_len:
                            return path + [w]
                        continue
                    stack.append((path + [w], blocked | adj[last] | (1 << w)))
    return None


def _induced_cycle_witness(G: Graph, min_len: int):
    cyc = find_induced_cycle(G, min_len)
    if cyc is not None:
        assert is_chordless_cycle(G, cyc), "uncertified cycle"
    return cyc


def maximum_cardinality_search(G: Graph) -> list:
    """Vertex order produced by MCS; reversed, it is a PEO iff G is chordal."""
    weight = {v: 0 for v in G.vertices}
    order = []
    remaining = set(G.vertices)
    while remaining:
        v = max(sorted(remaining), key=lambda u: weight[u])
        remaining.remove(v)
        order.append(v)
        for u in G.neighbors(v):
            if u in remaining:
                weight[u] += 1
    return order


def is_perfect_elimination_ordering(G: Graph, peo) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in G.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        # the earliest later neighbour must be adjacent to all other later neighbours
        p = min(later, key=pos.__getitem__)
        for u in later:
            if u != p and not G.has_edge(p, u):
                return False
    return True


def is_chordal_mcs(G: Graph) -> bool:
    return is_perfect_elimination_ordering(G, list(reversed(maximum_cardinality_search(G))))


def is_chordal_brute(G: Graph) -> bool:
    return find_induced_cycle(G, 4) is None


def is_chordal(G: Graph) -> bool:
    """True iff G has no chordless cycle of length >= 4 (MCS elimination test)."""
    return is_chordal_mcs(G)


def weak_chordality_witness(G: Graph):
    """(cycle, in_complement) for a chordless >=5-cycle in G or its complement, else None."""
    cyc = _induced_cycle_witness(G, 5)
    if cyc is not None:
        return cyc, False
    cyc = _induced_cycle_witness(complement(G), 5)
    if cyc is not None:
        return cyc, True
    return None


def is_weakly_chordal(G: Graph) -> bool:
    return weak_chordality_witness(G) is None


def edge_on_induced_c4(G: Graph, e) -> bool:
    """True iff some chordless 4-cycle of G uses the edge e."""
    u, v = _edge(*e)
    if not G.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    adj = G.adj
    # cycle u - v - w - x - u with u!~w, v!~x, w~x
    for w in _bits(adj[v] & ~adj[u] & ~(1 << u)):
        for x in _bits(adj[u] & ~adj[v] & ~(1 << v)):
            if w != x and adj[w] >> x & 1:
                return True
    return False


def middle_edge_of_induced_p3(G: Graph, e) -> bool:
    """True iff e = {b, c} is the middle edge of a chordless path a-b-c-d."""
    b, c = _edge(*e)
    if not G.has_edge(b, c):
        raise GraphError(f"{(b, c)} is not an edge")
    adj = G.adj
    for a in _bits(adj[b] & ~adj[c] & ~(1 << c)):
        for d in _bits(adj[c] & ~adj[b] & ~(1 << b)):
            if a != d and not adj[a] >> d & 1:
                return True
    return False


# -- completion sequences -------------------------------------------------------------
@dataclass(frozen=True)
class EdgeSequence:
    base: Graph
    added: tuple

    def graphs(self) -> list:
        """[G_0, G_1, ..., G_k] with G_0 = base."""
        out = [self.base]
        for e in self.added:
            out.append(out[-1].add_edge(*e))
        return out

    def verify(self) -> list:
        """Re-check all sequence conditions by brute force; returns failure messages."""
        problems = []
        g = self.base
        for i, e in enumerate(self.added, start=1):
            if e in g.edges:
                problems.append(f"e_{i}={e} already present")
                return problems
            g = g.add_edge(*e)
            if find_induced_cycle(g, 5) is not None or find_induced_cycle(complement(g), 5) is not None:
                problems.append(f"G_{i} not weakly chordal")
            if _edge_on_c4_brute(g, e):
                problems.append(f"e_{i}={e} lies on an induced C4 of G_{i}")
        if not is_chordal_brute(g):
            problems.append("final graph not chordal")
        return problems


def _edge_on_c4_brute(G: Graph, e) -> bool:
    u, v = e
    others = [w for w in G.vertices if w not in e]
    for w, x in itertools.permutations(others, 2):
        if is_chordless_cycle(G, [u, v, w, x]):
            return True
    return False


def completion_sequence(G: Graph) -> EdgeSequence:
    """Non-edges e_1..e_k keeping every G_i weakly chordal, e_i off induced C4s,
    and ending in a chordal graph.  Greedy in lexicographic order with full
    backtracking."""
    witness = weak_chordality_witness(G)
    if witness is not None:
        cyc, comp = witness
        where = "complement" if comp else "graph"
        raise ClassificationError(f"not weakly chordal: chordless cycle {cyc} in the {where}",
                                  cycle=cyc, in_complement=comp)
    dead = set()

    def search(g, seq):
        if is_chordal(g):
            return seq
        if g.edges in dead:
            return None
        for e in itertools.combinations(g.vertices, 2):
            if e in g.edges:
                continue
            h = g.add_edge(*e)
            if edge_on_induced_c4(h, e):
                continue
            if not is_weakly_chordal(h):
                continue
            found = search(h, seq + [e])
            if found is not None:
                return found
        dead.add(g.edges)
        return None

    found = search(G, [])
    if found is None:  # pragma: no cover - excluded by Hayward's generation theorem
        raise RuntimeError("no completion sequence found")
    return EdgeSequence(G, tuple(found))


# -- enumeration and canonical forms ------------------------------------------------------
def adjacency_bits(G: Graph, perm=None) -> int:
    """Upper-triangle adjacency bit string (column-major) under a relabelling.

    ``perm[i]`` is the original vertex placed at position i+1.
    """
    perm = list(G.vertices) if perm is None else perm
    adj = G.adj
    bits = 0
    for j in range(1, G.n):
        vj = perm[j]
        row = adj[vj]
        for i in range(j):
            bits = (bits << 1) | (row >> perm[i] & 1)
    return bits


def _refined_cells(G: Graph) -> list:
    """Ordered equitable partition from iterated degree refinement."""
    adj = G.adj
    colour = {v: 0 for v in G.vertices}
    while True:
        sig = {}
        for v in G.vertices:
            counts = tuple(sorted(colour[u] for u in _bits(adj[v])))
            sig[v] = (colour[v], counts)
        keys = sorted(set(sig.values()))
        new = {v: keys.index(sig[v]) for v in G.vertices}
        if len(keys) == len(set(colour.values())):
            colour = new
            break
        colour = new
    cells = [[] for _ in range(max(colour.values()) + 1)] if G.n else []
    for v in G.vertices:
        cells[colour[v]].append(v)
    return cells


def canonical_form(G: Graph) -> int:
    """Isomorphism invariant that determines G up to isomorphism.

    Minimum adjacency bit string over all relabellings compatible with an
    isomorphism-invariant ordered vertex partition (degree refinement).
    """
    if G.n <= 1:
        return 0
    cells = _refined_cells(G)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        perm = [v for part in parts for v in part]
        b = adjacency_bits(G, perm)
        if best is None or b < best:
            best = b
    return best


def canonical_graph(G: Graph) -> Graph:
    return graph_from_bits(G.n, canonical_form(G))


def graph_from_bits(n: int, bits: int) -> Graph:
    total = n * (n - 1) // 2
    edges = []
    pos = total - 1
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


def canonical_string(G: Graph) -> str:
    from .graphio import to_graph6
    return to_graph6(canonical_graph(G))


def canonical_form_bruteforce(G: Graph) -> int:
    """Minimum adjacency bit string over all n! relabellings (reference)."""
    if G.n <= 1:
        return 0
    return min(adjacency_bits(G, list(p)) for p in itertools.permutations(G.vertices))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and len(G.edges) == len(H.edges) and canonical_form(G) == canonical_form(H)


MAX_ENUM = 8


def enumerate_graphs(n: int, up_to_iso: bool = True) -> Iterator[Graph]:
    """All labelled graphs on n vertices, or one representative per isomorphism class.

    Representatives are canonical graphs, generated by vertex extension from
    the (n-1)-vertex classes and yielded in increasing canonical order.
    """
    if not 1 <= n <= MAX_ENUM:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM}, got {n}")
    if not up_to_iso:
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
        return
    for bits in _iso_classes(n):
        yield graph_from_bits(n, bits)


_CLASS_CACHE = {}


def _iso_classes(n: int) -> list:
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n == 1:
        result = [0]
    else:
        seen = set()
        for bits in _iso_classes(n - 1):
            small = graph_from_bits(n - 1, bits)
            for mask in range(1 << (n - 1)):
                edges = set(small.edges)
                edges.update((v, n) for v in range(1, n) if mask >> (v - 1) & 1)
                seen.add(canonical_form(Graph(n, frozenset(edges))))
        result = sorted(seen)
    _CLASS_CACHE[n] = result
    return result
