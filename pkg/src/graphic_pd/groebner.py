"""Graded submodules of free modules over Q[x1..xl]: Groebner bases, kernels,
minimal free resolutions and Betti tables.

Module terms use position-over-term order (lower component index is more
significant) over degrevlex.  Internally a vector is a dict from packed term
keys to integers; coefficients are kept primitive, so all arithmetic is in Z.
Pair selection follows the normal strategy by degree, with the
Gebauer-Moeller criteria (the product criterion does not apply to modules).
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .poly import Polynomial, PolyRing, _q


class GradingError(ValueError):
    """Input that should be homogeneous is not."""


class NonTerminationError(RuntimeError):
    """A resolution exceeded its length budget."""


# -- free modules and elements ------------------------------------------------------
class FreeModule:
    """S(-s_0) + ... + S(-s_{r-1}); ``shifts[k]`` is the degree of basis vector e_k."""

    __slots__ = ("ring", "shifts", "rank", "pos_shift", "mono_mask")

    def __init__(self, nvars: int, shifts):
        self.ring = PolyRing.get(nvars)
        self.shifts = tuple(shifts)
        self.rank = len(self.shifts)
        self.pos_shift = self.ring.deg_shift + 8
        self.mono_mask = (1 << self.pos_shift) - 1

    @property
    def nvars(self):
        return self.ring.nvars

    def term(self, p: int, mono: int) -> int:
        return ((self.rank - 1 - p) << self.pos_shift) | mono

    def pos(self, term: int) -> int:
        return self.rank - 1 - (term >> self.pos_shift)

    def term_degree(self, term: int) -> int:
        return ((term & self.mono_mask) >> self.ring.deg_shift) + self.shifts[self.pos(term)]


@dataclass(frozen=True)
class FreeModuleElement:
    components: tuple
    shifts: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "shifts", tuple(self.shifts))
        if len(self.components) != len(self.shifts):
            raise ValueError("components and shifts differ in length")

    @classmethod
    def zero(cls, nvars, shifts):
        return cls(tuple(Polynomial.zero(nvars) for _ in shifts), shifts)

    @classmethod
    def basis(cls, k, nvars, shifts):
        comps = [Polynomial.zero(nvars) for _ in shifts]
        comps[k] = Polynomial.one(nvars)
        return cls(tuple(comps), shifts)

    @property
    def nvars(self):
        return self.components[0].nvars if self.components else 0

    @property
    def rank(self):
        return len(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def degrees(self):
        out = set()
        for c, s in zip(self.components, self.shifts):
            if c:
                shift = c.ring.deg_shift
                out.update((k >> shift) + s for k in c._t)
        return out

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Total degree of a homogeneous element; None for zero."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise GradingError(f"inhomogeneous element with degrees {sorted(ds)}")
        return ds.pop()

    def __add__(self, other):
        return FreeModuleElement(tuple(a + b for a, b in zip(self.components, other.components)), self.shifts)

    def __sub__(self, other):
        return FreeModuleElement(tuple(a - b for a, b in zip(self.components, other.components)), self.shifts)

    def __neg__(self):
        return FreeModuleElement(tuple(-a for a in self.components), self.shifts)

    def scale(self, p):
        """Multiply by a polynomial or rational scalar."""
        if isinstance(p, Polynomial):
            return FreeModuleElement(tuple(p * a for a in self.components), self.shifts)
        return FreeModuleElement(tuple(a.scale(p) for a in self.components), self.shifts)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def combine(coeffs, columns, nvars, shifts):
    """sum(coeffs[k] * columns[k]) in the free module with the given shifts."""
    acc = [Polynomial.zero(nvars) for _ in shifts]
    for a, col in zip(coeffs, columns):
        if not a:
            continue
        for t, comp in enumerate(col.components):
            if comp:
                acc[t] = acc[t] + a * comp
    return FreeModuleElement(tuple(acc), shifts)


def _to_vec(M: FreeModule, elem: FreeModuleElement) -> dict:
    den = 1
    for comp in elem.components:
        for c in comp._t.values():
            if type(c) is Fraction:
                den = den * c.denominator // math.gcd(den, c.denominator)
    vec = {}
    for p, comp in enumerate(elem.components):
        base = M.term(p, 0)
        for k, c in comp._t.items():
            vec[base | k] = int(c * den)
    return vec


def _from_vec(M: FreeModule, vec: dict, scale=1) -> FreeModuleElement:
    comps = [dict() for _ in range(M.rank)]
    mask = M.mono_mask
    for t, c in vec.items():
        comps[M.pos(t)][t & mask] = _q(Fraction(c, scale)) if scale != 1 else c
    return FreeModuleElement(tuple(Polynomial._raw(M.ring, d) for d in comps), M.shifts)


def _primitive(vec: dict) -> dict:
    if not vec:
        return vec
    g = math.gcd(*vec.values())
    if vec[max(vec)] < 0:
        g = -g
    if g == 1:
        return vec
    return {k: c // g for k, c in vec.items()}


# -- Buchberger engine -------------------------------------------------------------------
class _Engine:
    """Incremental homogeneous Buchberger over a free module.

    With ``stop`` set, components ``>= stop`` are bookkeeping only: an element
    whose leading position is ``>= stop`` is recorded in ``kernel`` and
    neither reduces anything nor forms pairs.
    """

    def __init__(self, M: FreeModule, stop: Optional[int] = None):
        self.M = M
        self.stop = M.rank if stop is None else stop
        self.elems = []
        self.lterm = []
        self.lmono = []
        self.lexps = []
        self.lcoef = []
        self.lpos = []
        self.active = [[] for _ in range(M.rank)]
        self.pairs = [dict() for _ in range(M.rank)]
        self.heap = []
        self.kernel = []

    # reduction ----------------------------------------------------------
    def _find_reducer(self, p, mono):
        one = self.M.ring.one
        guard = self.M.ring.guard
        lmono = self.lmono
        for idx in self.active[p]:
            if not ((mono - lmono[idx] + one) & guard):
                return idx
        return None

    def top_reduce(self, f: dict) -> dict:
        M = self.M
        ps = M.pos_shift
        mask = M.mono_mask
        top = M.rank - 1
        stop = self.stop
        heap = [-k for k in f]
        heapq.heapify(heap)
        while heap:
            t = -heap[0]
            if t not in f:
                heapq.heappop(heap)
                continue
            p = top - (t >> ps)
            if p >= stop:
                break
            idx = self._find_reducer(p, t & mask)
            if idx is None:
                break
            heapq.heappop(heap)
            f = self._subtract(f, t, idx, heap)
        return _primitive(f)

    def full_reduce(self, f: dict):
        """Normal form of f; returns (remainder, scale) with scale*f == remainder + combination."""
        M = self.M
        ps = M.pos_shift
        mask = M.mono_mask
        top = M.rank - 1
        r = {}
        scale = 1
        heap = [-k for k in f]
        heapq.heapify(heap)
        while heap:
            t = -heapq.heappop(heap)
            if t not in f:
                continue
            p = top - (t >> ps)
            idx = self._find_reducer(p, t & mask) if p < self.stop else None
            if idx is None:
                r[t] = f.pop(t)
                continue
            cf = f[t]
            cg = self.lcoef[idx]
            a = abs(cg // math.gcd(cf, cg))
            if a != 1:
                r = {k: c * a for k, c in r.items()}
                scale *= a
            f = self._subtract(f, t, idx, heap)
        return r, scale

    def _subtract(self, f, t, idx, heap):
        """Cancel the term t of f using element idx (f may be scaled by an integer).

        Keys of new terms are pushed on ``heap`` (a max-heap of negated keys).
        """
        cf = f[t]
        cg = self.lcoef[idx]
        g = math.gcd(cf, cg)
        a = cg // g
        b = cf // g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            f = {k: c * a for k, c in f.items()}
        off = (t & self.M.mono_mask) - self.lmono[idx]
        get = f.get
        push = heapq.heappush
        for k, c in self.elems[idx].items():
            kk = k + off
            v = get(kk)
            if v is None:
                f[kk] = -b * c
                push(heap, -kk)
            else:
                v -= b * c
                if v:
                    f[kk] = v
                else:
                    del f[kk]
        return f

    # basis maintenance --------------------------------------------------------
    def _lcm(self, i, exps):
        return tuple(map(max, self.lexps[i], exps))

    def add(self, f: dict) -> int:
        M = self.M
        t = max(f)
        p = M.pos(t)
        if p >= self.stop:
            self.kernel.append(f)
            return -1
        ring = M.ring
        n = len(self.elems)
        mono = t & M.mono_mask
        exps = ring.exps(mono)
        self.elems.append(f)
        self.lterm.append(t)
        self.lmono.append(mono)
        self.lexps.append(exps)
        self.lcoef.append(f[t])
        self.lpos.append(p)
        self._update(n, p, mono, exps)
        return n

    def _update(self, h, p, hmono, hexps):
        ring = self.M.ring
        one, guard = ring.one, ring.guard
        shift = self.M.shifts[p]
        cand = []
        for g in self.active[p]:
            lexps = self._lcm(g, hexps)
            cand.append((ring.key(lexps), g))
        kept = []
        for i, (L, g) in enumerate(cand):
            redundant = False
            for L2, _ in cand[i + 1:]:
                if not ((L - L2 + one) & guard):
                    redundant = True
                    break
            if not redundant:
                for L2, _ in kept:
                    if not ((L - L2 + one) & guard):
                        redundant = True
                        break
            if not redundant:
                kept.append((L, g))
        old = self.pairs[p]
        if old:
            dead = []
            for (i, j), (deg, L) in old.items():
                if (L - hmono + one) & guard:
                    continue
                Li = ring.key(self._lcm(i, hexps))
                Lj = ring.key(self._lcm(j, hexps))
                if Li != L and Lj != L:
                    dead.append((i, j))
            for key in dead:
                del old[key]
        for L, g in kept:
            deg = ring.degree(L) + shift
            old[(g, h)] = (deg, L)
            heapq.heappush(self.heap, (deg, L, g, h, p))
        act = self.active[p]
        act[:] = [g for g in act if (self.lmono[g] - hmono + one) & guard]
        act.append(h)

    def spoly(self, i, j, L):
        off_i = L - self.lmono[i]
        off_j = L - self.lmono[j]
        ci, cj = self.lcoef[i], self.lcoef[j]
        g = math.gcd(ci, cj)
        a, b = cj // g, ci // g
        f = {k + off_i: a * c for k, c in self.elems[i].items()}
        get = f.get
        for k, c in self.elems[j].items():
            kk = k + off_j
            v = get(kk, 0) - b * c
            if v:
                f[kk] = v
            else:
                del f[kk]
        return f

    def next_pair_degree(self):
        heap = self.heap
        while heap:
            deg, L, i, j, p = heap[0]
            if (i, j) in self.pairs[p]:
                return deg
            heapq.heappop(heap)
        return None

    def pop_pair(self):
        deg, L, i, j, p = heapq.heappop(self.heap)
        del self.pairs[p][(i, j)]
        return i, j, L

    def run(self, inputs, degree_limit=None, on_input=None):
        """Process inputs (vec, degree) sorted by degree, interleaved with pairs.

        ``on_input(k, reduced)`` is called for each input with its reduced form.
        """
        order = sorted(range(len(inputs)), key=lambda k: inputs[k][1])
        pos = 0
        while True:
            dp = self.next_pair_degree()
            di = inputs[order[pos]][1] if pos < len(order) else None
            if dp is None and di is None:
                break
            use_pair = dp is not None and (di is None or dp <= di)
            if degree_limit is not None and (dp if use_pair else di) > degree_limit:
                break
            if use_pair:
                i, j, L = self.pop_pair()
                r = self.top_reduce(self.spoly(i, j, L))
                if r:
                    self.add(r)
            else:
                k = order[pos]
                pos += 1
                r = self.top_reduce(dict(inputs[k][0]))
                if on_input is not None:
                    on_input(k, r)
                if r:
                    self.add(r)

    def basis_indices(self):
        return [g for p in range(self.stop) for g in self.active[p]]


def _check_homogeneous(elems):
    degs = []
    for e in elems:
        if not e.is_homogeneous():
            raise GradingError(f"inhomogeneous generator {e}")
        degs.append(e.degree)
    return degs


def _module_of(elems, nvars=None, shifts=None) -> FreeModule:
    if elems:
        return FreeModule(elems[0].nvars, elems[0].shifts)
    return FreeModule(nvars, shifts)


class GroebnerBasis:
    """Reduced Groebner basis of a graded submodule."""

    def __init__(self, M: FreeModule, engine: _Engine, reduced: list):
        self.M = M
        self._engine = engine
        self._reduced = reduced

    @property
    def elements(self) -> list:
        return [_from_vec(self.M, v) for v in self._reduced]

    def __len__(self):
        return len(self._reduced)

    def leading_terms(self):
        out = []
        for v in self._reduced:
            t = max(v)
            out.append((self.M.pos(t), self.M.ring.exps(t & self.M.mono_mask)))
        return out

    def normal_form(self, elem: FreeModuleElement) -> FreeModuleElement:
        r, scale = self._engine.full_reduce(_to_vec(self.M, elem))
        den = 1
        for comp in elem.components:
            for c in comp._t.values():
                if type(c) is Fraction:
                    den = den * c.denominator // math.gcd(den, c.denominator)
        return _from_vec(self.M, r, scale * den)

    def contains(self, elem: FreeModuleElement) -> bool:
        return not self._engine.full_reduce(_to_vec(self.M, elem))[0]

    def key(self):
        """Hashable canonical form of the reduced basis."""
        return tuple(sorted(tuple(sorted(v.items())) for v in self._reduced))

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def groebner_basis(gens, nvars=None, shifts=None, homogeneous=True) -> GroebnerBasis:
    """Reduced Groebner basis (position-over-term, degrevlex) of the span of gens."""
    gens = list(gens)
    M = _module_of(gens, nvars, shifts)
    if homogeneous:
        degs = _check_homogeneous(gens)
    else:
        degs = [max(e.degrees(), default=0) for e in gens]
    eng = _Engine(M)
    eng.run([(_to_vec(M, g), d) for g, d in zip(gens, degs) if not g.is_zero()])
    idx = eng.basis_indices()
    # interreduce: tail-reduce every element by the others
    reduced = []
    for g in idx:
        others = _Engine(M)
        others.lmono, others.lcoef, others.elems = eng.lmono, eng.lcoef, eng.elems
        others.active = [[h for h in a if h != g] for a in eng.active]
        f = eng.elems[g]
        t = max(f)
        head = {t: f[t]}
        rest = {k: c for k, c in f.items() if k != t}
        r, scale = others.full_reduce(rest)
        v = {k: c * scale for k, c in head.items()}
        v.update(r)
        reduced.append(_primitive(v))
    final = _Engine(M)
    for v in sorted(reduced, key=lambda v: (M.term_degree(max(v)), max(v))):
        # re-register so that normal forms use the reduced elements
        t = max(v)
        p = M.pos(t)
        n = len(final.elems)
        final.elems.append(v)
        final.lterm.append(t)
        final.lmono.append(t & M.mono_mask)
        final.lexps.append(M.ring.exps(t & M.mono_mask))
        final.lcoef.append(v[t])
        final.lpos.append(p)
        final.active[p].append(n)
    return GroebnerBasis(M, final, final.elems)


def ideal_groebner_basis(polys, homogeneous=True) -> GroebnerBasis:
    polys = [p for p in polys]
    nvars = polys[0].nvars
    return groebner_basis([FreeModuleElement((p,), (0,)) for p in polys], nvars, (0,),
                          homogeneous=homogeneous)


# -- kernels and minimal generators ---------------------------------------------------------
@dataclass
class Presentation:
    """Generators of a graded submodule of the free module with ``ambient_shifts``."""

    generators: list
    nvars: int
    ambient_shifts: tuple

    @property
    def degrees(self):
        return [g.degree for g in self.generators]


def minimal_generators(gens, nvars=None, shifts=None) -> list:
    """A minimal homogeneous generating subset (graded Nakayama, degree by degree)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    M = _module_of(gens, nvars, shifts)
    degs = _check_homogeneous(gens)
    vecs = [_to_vec(M, g) for g in gens]
    order = sorted(range(len(gens)), key=lambda k: (degs[k], len(vecs[k])))
    eng = _Engine(M)
    keep = []

    def note(k, r):
        if r:
            keep.append(order[k])

    eng.run([(vecs[k], degs[k]) for k in order], degree_limit=max(degs), on_input=note)
    keep.sort(key=lambda k: (degs[k], order.index(k)))
    return [gens[k] for k in keep]


def module_kernel(columns, source_shifts=None, nvars=None, target_shifts=None,
                  minimal=True) -> Presentation:
    """Kernel of the map F -> G sending basis vector e_j to columns[j].

    F carries ``source_shifts`` (default: the column degrees).  The kernel is
    read off the S-pair syzygies of a tracked Groebner basis of the image.
    """
    columns = list(columns)
    if columns:
        nvars = columns[0].nvars
        target_shifts = columns[0].shifts
    if source_shifts is None:
        source_shifts = []
        for c in columns:
            if c.is_zero():
                raise GradingError("zero column needs an explicit source shift")
            source_shifts.append(c.degree)
    source_shifts = tuple(source_shifts)
    for c, s in zip(columns, source_shifts):
        if not c.is_zero() and c.degree != s:
            raise GradingError(f"column of degree {c.degree} assigned shift {s}")
    rg = len(target_shifts)
    A = FreeModule(nvars, tuple(target_shifts) + source_shifts)
    eng = _Engine(A, stop=rg)
    inputs = []
    for j, c in enumerate(columns):
        v = {}
        for p, comp in enumerate(c.components):
            base = A.term(p, 0)
            for k, co in comp._t.items():
                v[base | k] = co
        # columns are scaled to integers; the bookkeeping entry absorbs the factor
        den = 1
        for co in v.values():
            if type(co) is Fraction:
                den = den * co.denominator // math.gcd(den, co.denominator)
        v = {k: int(co * den) for k, co in v.items()}
        v[A.term(rg + j, A.ring.one)] = den
        inputs.append((v, source_shifts[j]))
    eng.run(inputs)
    F = FreeModule(nvars, source_shifts)
    off = A.term(rg, 0) - F.term(0, 0)
    kern = []
    for v in eng.kernel:
        w = {t - off: c for t, c in v.items()}
        kern.append(_from_vec(F, _primitive(w)))
    if minimal:
        kern = minimal_generators(kern, nvars, source_shifts)
    return Presentation(kern, nvars, source_shifts)


# -- resolutions --------------------------------------------------------------------------
class BettiTable:
    """Graded Betti numbers b[(i, degree)] = rank."""

    def __init__(self, data=None):
        self.data = {k: v for k, v in (data or {}).items() if v}

    @classmethod
    def from_shifts(cls, shift_lists):
        data = {}
        for i, shifts in enumerate(shift_lists):
            for s in shifts:
                data[(i, s)] = data.get((i, s), 0) + 1
        return cls(data)

    def __eq__(self, other):
        if isinstance(other, dict):
            other = BettiTable(other)
        return isinstance(other, BettiTable) and self.data == other.data

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.data.items()))})"

    def __getitem__(self, key):
        return self.data.get(key, 0)

    def ranks(self) -> list:
        if not self.data:
            return []
        top = max(i for i, _ in self.data)
        return [sum(v for (i, _), v in self.data.items() if i == k) for k in range(top + 1)]

    @property
    def projective_dimension(self):
        r = self.ranks()
        return len(r) - 1 if r else None

    def shifted(self, extra):
        data = dict(self.data)
        for k, v in BettiTable(extra).data.items():
            data[k] = data.get(k, 0) + v
        return BettiTable(data)

    def hilbert_function(self, d: int, nvars: int) -> int:
        total = 0
        for (i, a), b in self.data.items():
            if d - a >= 0:
                total += (-1) ** i * b * comb(d - a + nvars - 1, nvars - 1)
        return total

    def euler_rank(self) -> int:
        return sum((-1) ** i * b for (i, _), b in self.data.items())

    def to_dict(self):
        return {"betti": [{"i": i, "degree": d, "rank": r} for (i, d), r in sorted(self.data.items())]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj):
        return cls({(e["i"], e["degree"]): e["rank"] for e in obj["betti"]})

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        """Macaulay2-style table: row j, column i holds b[i, i + j]."""
        if not self.data:
            return "0"
        cols = range(max(i for i, _ in self.data) + 1)
        rows = sorted({d - i for i, d in self.data})
        rows = range(rows[0], rows[-1] + 1)
        ranks = self.ranks()
        w = max(len(str(v)) for v in ranks + [max(cols)]) + 1
        lines = ["       " + "".join(str(i).rjust(w) for i in cols),
                 "total: " + "".join(str(r).rjust(w) for r in ranks)]
        for j in rows:
            cells = "".join((str(self.data[(i, i + j)]) if (i, i + j) in self.data else ".").rjust(w)
                            for i in cols)
            lines.append(f"{j:>5}: " + cells)
        return "\n".join(lines)


@dataclass
class Resolution:
    """Minimal graded free resolution F_n -> ... -> F_0 -> M.

    ``shifts[i]`` are the degrees of the basis of F_i; ``maps[0]`` lists the
    images of F_0's basis in the ambient module and ``maps[i]`` (i >= 1) the
    images of F_i's basis in F_{i-1}.
    """

    nvars: int
    ambient_shifts: tuple
    shifts: list = field(default_factory=list)
    maps: list = field(default_factory=list)

    def betti(self) -> BettiTable:
        return BettiTable.from_shifts(self.shifts)

    @property
    def length(self):
        return len(self.shifts) - 1

    def ranks(self):
        return [len(s) for s in self.shifts]

    def compositions_vanish(self) -> bool:
        for i in range(1, len(self.maps)):
            tgt = self.maps[i - 1]
            shifts = self.ambient_shifts if i == 1 else self.shifts[i - 2]
            for col in self.maps[i]:
                img = combine(col.components, tgt, self.nvars, shifts)
                if not img.is_zero():
                    return False
        return True

    def is_minimal(self) -> bool:
        for i in range(1, len(self.maps)):
            for col in self.maps[i]:
                for comp in col.components:
                    if comp.constant_term():
                        return False
        return True


def projective_dimension(res: Resolution) -> int:
    return res.length


def minimal_free_resolution(P: Presentation, max_length: Optional[int] = None) -> Resolution:
    """Iterated minimal syzygies of a homogeneous presentation."""
    gens = minimal_generators(P.generators, P.nvars, P.ambient_shifts)
    res = Resolution(P.nvars, tuple(P.ambient_shifts))
    if not gens:
        return res
    res.shifts.append(tuple(g.degree for g in gens))
    res.maps.append(gens)
    limit = (P.nvars + 1) if max_length is None else max_length
    while True:
        cols = res.maps[-1]
        ker = module_kernel(cols, res.shifts[-1])
        if not ker.generators:
            break
        if len(res.shifts) > limit:
            raise NonTerminationError(f"resolution longer than {limit}")
        order = sorted(range(len(ker.generators)), key=lambda k: ker.generators[k].degree)
        gens = [ker.generators[k] for k in order]
        res.shifts.append(tuple(g.degree for g in gens))
        res.maps.append(gens)
    return res


def minimize_complex(maps, shifts, nvars, ambient_shifts):
    """Cancel unit entries of a graded complex until it is minimal.

    ``maps``/``shifts`` follow the Resolution layout; returns new
    (maps, shifts).  Entries of maps[i] (i >= 1) that are non-zero
    constants are eliminated by the usual change of basis, dropping one
    basis vector of F_i and one of F_{i-1}.
    """
    maps = [[list(col.components) for col in m] for m in maps]
    shifts = [list(s) for s in shifts]

    def find_unit():
        for i in range(1, len(maps)):
            for c, col in enumerate(maps[i]):
                for r, ent in enumerate(col):
                    if ent and ent.is_constant():
                        return i, r, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        i, r, c = hit
        u = Fraction(maps[i][c][r].constant_term())
        pivot_col = maps[i][c]
        new_cols = []
        for c2, col in enumerate(maps[i]):
            if c2 == c:
                continue
            lam = col[r]
            if lam:
                col = [a - (lam * b).scale(1 / u) for a, b in zip(col, pivot_col)]
            new_cols.append([a for k, a in enumerate(col) if k != r])
        maps[i] = new_cols
        if i + 1 < len(maps):
            maps[i + 1] = [[a for k, a in enumerate(col) if k != c] for col in maps[i + 1]]
        maps[i - 1] = [col for k, col in enumerate(maps[i - 1]) if k != r]
        del shifts[i][c]
        del shifts[i - 1][r]
    while shifts and not shifts[-1]:
        shifts.pop()
        maps.pop()
    out_maps = []
    for i, m in enumerate(maps):
        tgt = ambient_shifts if i == 0 else shifts[i - 1]
        out_maps.append([FreeModuleElement(tuple(col), tuple(tgt)) for col in m])
    return out_maps, [tuple(s) for s in shifts]


# -- ideal membership ------------------------------------------------------------------
@dataclass
class Membership:
    member: bool
    cofactors: Optional[list] = None
    remainder: Optional[Polynomial] = None

    def __bool__(self):
        return self.member


def _denominator(p: Polynomial) -> int:
    den = 1
    for c in p._t.values():
        if type(c) is Fraction:
            den = den * c.denominator // math.gcd(den, c.denominator)
    return den


def ideal_membership(f: Polynomial, gens) -> Membership:
    """Decide f in (gens); certificate f == sum(c_i g_i) or the non-zero normal form.

    Each generator g_j is carried as (g_j, e_j) so every basis element
    records its own expression in the generators.  Inhomogeneous input is
    accepted; degrees then only steer pair selection.
    """
    gens = list(gens)
    nvars = f.nvars
    nz = [k for k, g in enumerate(gens) if g]
    homog = f.is_homogeneous() and all(gens[k].is_homogeneous() for k in nz)
    ring = PolyRing.get(nvars)

    def top_degree(p):
        return max(ring.degree(t) for t in p._t)

    degs = [top_degree(gens[k]) for k in nz]
    A = FreeModule(nvars, (0,) + tuple(degs if homog else [0] * len(nz)))
    eng = _Engine(A, stop=1)
    vecs = []
    for j, k in enumerate(nz):
        den = _denominator(gens[k])
        w = {A.term(0, t): int(c * den) for t, c in gens[k]._t.items()}
        w[A.term(1 + j, ring.one)] = den
        vecs.append((w, degs[j]))
    eng.run(vecs)
    den_f = _denominator(f)
    r, scale = eng.full_reduce({A.term(0, t): int(c * den_f) for t, c in f._t.items()})
    total = scale * den_f
    rem = {t & A.mono_mask: _q(Fraction(c, total)) for t, c in r.items() if A.pos(t) == 0}
    if rem:
        return Membership(False, remainder=Polynomial._raw(ring, rem))
    parts = [dict() for _ in nz]
    for t, c in r.items():
        parts[A.pos(t) - 1][t & A.mono_mask] = _q(Fraction(-c, total))
    cof = [Polynomial.zero(nvars) for _ in gens]
    for j, k in enumerate(nz):
        cof[k] = Polynomial._raw(ring, parts[j])
    check = Polynomial.zero(nvars)
    for c, g in zip(cof, gens):
        check = check + c * g
    if check != f:  # pragma: no cover - certificate arithmetic must close
        raise AssertionError("membership certificate failed to verify")
    return Membership(True, cofactors=cof)
