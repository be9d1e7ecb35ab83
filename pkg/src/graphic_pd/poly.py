"""Exact multivariate polynomials over the rationals.

Monomials are packed into a single Python integer whose natural ordering is
the degree-reverse-lexicographic order with x1 > x2 > ... > xl.  Each
variable gets an 8-bit field holding ``127 - exponent`` and the total degree
sits above all fields, so

* comparing keys compares monomials,
* ``key(a*b) == key(a) + key(b) - ring.one``,
* ``a | b`` iff ``(key(b) - key(a) + ring.one) & ring.guard == 0``.

Exponents (and total degrees) are limited to 127, far above anything this
package needs.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from functools import lru_cache

FIELD = 8
MAX_EXP = 127


class DivisibilityError(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""

    def __init__(self, remainder):
        super().__init__(f"inexact division, remainder {remainder}")
        self.remainder = remainder


def _q(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class PolyRing:
    """Packing context for monomials in ``nvars`` variables."""

    __slots__ = ("nvars", "one", "guard", "deg_shift", "_var_keys")

    def __init__(self, nvars: int):
        if nvars < 0:
            raise ValueError("number of variables must be non-negative")
        self.nvars = nvars
        self.deg_shift = FIELD * nvars
        self.one = sum(MAX_EXP << (FIELD * k) for k in range(nvars))
        self.guard = sum(128 << (FIELD * k) for k in range(nvars))
        self._var_keys = tuple(self.key(tuple(int(k == i) for k in range(nvars)))
                               for i in range(nvars))

    @staticmethod
    @lru_cache(maxsize=None)
    def get(nvars: int) -> "PolyRing":
        return PolyRing(nvars)

    def key(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        deg = 0
        k = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_EXP:
                raise OverflowError(f"exponent {e} outside 0..{MAX_EXP}")
            deg += e
            k += (MAX_EXP - e) << (FIELD * i)
        if deg > MAX_EXP:
            raise OverflowError(f"total degree {deg} exceeds {MAX_EXP}")
        return (deg << self.deg_shift) + k

    def exps(self, key: int) -> tuple:
        return tuple(MAX_EXP - ((key >> (FIELD * i)) & 0xFF) for i in range(self.nvars))

    def degree(self, key: int) -> int:
        return key >> self.deg_shift

    def var_key(self, i: int) -> int:
        """Key of the variable x_i (1-based)."""
        return self._var_keys[i - 1]

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a + self.one) & self.guard)

    def lcm(self, a: int, b: int) -> int:
        return self.key(tuple(map(max, self.exps(a), self.exps(b))))

    def __repr__(self):
        return f"PolyRing({self.nvars})"


class Polynomial:
    """Immutable polynomial in ``nvars`` variables with rational coefficients.

    Coefficients are stored as ``int`` whenever integral and as ``Fraction``
    otherwise.  ``terms`` maps packed monomial keys to non-zero coefficients.
    """

    __slots__ = ("ring", "_t", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.ring = PolyRing.get(nvars)
        self._t = {} if terms is None else {k: v for k, v in terms.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p._t = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        r = PolyRing.get(nvars)
        c = _q(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw(r, {r.one: c} if c else {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, i, nvars):
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        r = PolyRing.get(nvars)
        return cls._raw(r, {r.var_key(i): 1})

    @classmethod
    def from_exponents(cls, items, nvars):
        """Build from ``{exponent-tuple: coefficient}`` or an iterable of pairs."""
        r = PolyRing.get(nvars)
        if isinstance(items, dict):
            items = items.items()
        t = {}
        for e, c in items:
            k = r.key(tuple(e))
            t[k] = t.get(k, 0) + c
        return cls._raw(r, {k: _q(c) for k, c in t.items() if c})

    @classmethod
    def linear(cls, coeffs):
        """The linear form sum(coeffs[k] * x_{k+1})."""
        n = len(coeffs)
        r = PolyRing.get(n)
        return cls._raw(r, {r.var_key(i + 1): _q(c) for i, c in enumerate(coeffs) if c})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls.from_exponents([(tuple(exps), coeff)], len(exps))

    # -- basic queries ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    @property
    def degree(self):
        """Total degree; ``None`` for the zero polynomial."""
        if not self._t:
            return None
        shift = self.ring.deg_shift
        return max(k >> shift for k in self._t)

    def is_homogeneous(self) -> bool:
        shift = self.ring.deg_shift
        return len({k >> shift for k in self._t}) <= 1

    def items(self):
        """(exponent tuple, coefficient) pairs in decreasing term order."""
        r = self.ring
        return [(r.exps(k), self._t[k]) for k in sorted(self._t, reverse=True)]

    def leading_key(self):
        return max(self._t) if self._t else None

    def lc(self):
        return self._t[max(self._t)] if self._t else 0

    def lm(self):
        return self.ring.exps(max(self._t)) if self._t else None

    def coefficient(self, exps):
        return self._t.get(self.ring.key(tuple(exps)), 0)

    def constant_term(self):
        return self._t.get(self.ring.one, 0)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and self.ring.one in self._t)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = _q(v)
            else:
                t.pop(k, None)
        return Polynomial._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self._t or not other._t:
            return Polynomial._raw(self.ring, {})
        if self.degree + other.degree > MAX_EXP:
            raise OverflowError("product degree exceeds packing limit")
        r = self.ring
        base = r.one
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        bi = iter(b.items())
        k2, c2 = next(bi)
        off = k2 - base
        t = {k + off: c * c2 for k, c in a.items()}
        get = t.get
        for k2, c2 in bi:
            off = k2 - base
            for k1, c1 in a.items():
                k = k1 + off
                t[k] = get(k, 0) + c1 * c2
        if all(type(c) is int for c in a.values()) and all(type(c) is int for c in b.values()):
            return Polynomial._raw(r, {k: c for k, c in t.items() if c})
        return Polynomial._raw(r, {k: _q(c) for k, c in t.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c):
        c = _q(Fraction(c)) if type(c) is not int else c
        if not c:
            return Polynomial._raw(self.ring, {})
        return Polynomial._raw(self.ring, {k: _q(v * c) for k, v in self._t.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, key: int, coeff=1):
        off = key - self.ring.one
        return Polynomial._raw(self.ring, {k + off: _q(c * coeff) for k, c in self._t.items()})

    def divmod(self, g: "Polynomial"):
        """Division by a single polynomial in degrevlex; returns (q, r)."""
        g = self._check(g)
        if not g._t:
            raise ZeroDivisionError("division by the zero polynomial")
        r = self.ring
        gk = max(g._t)
        gc = g._t[gk]
        gitems = list(g._t.items())
        f = dict(self._t)
        q = {}
        rem = {}
        while f:
            k = max(f)
            c = f[k]
            if r.divides(gk, k):
                m = k - gk + r.one
                cq = _q(Fraction(c) / gc) if c % gc else c // gc
                q[m] = cq
                off = m - r.one
                for k2, c2 in gitems:
                    kk = k2 + off
                    v = f.get(kk, 0) - cq * c2
                    if v:
                        f[kk] = _q(v)
                    else:
                        del f[kk]
            else:
                rem[k] = c
                del f[k]
        return Polynomial._raw(r, q), Polynomial._raw(r, rem)

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        q, rem = self.divmod(g)
        if rem._t:
            raise DivisibilityError(rem)
        return q

    def divides(self, f: "Polynomial") -> bool:
        return not f.divmod(self)[1]._t

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.nvars, frozenset(self._t.items())))
        return self._hash

    # -- calculus and substitution ------------------------------------------
    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to x_i (1-based)."""
        r = self.ring
        shift = FIELD * (i - 1)
        vk = r.var_key(i)
        t = {}
        for k, c in self._t.items():
            e = MAX_EXP - ((k >> shift) & 0xFF)
            if e:
                t[k - vk + r.one] = c * e
        return Polynomial._raw(r, t)

    def rename(self, mapping, nvars=None) -> "Polynomial":
        """Substitute variables by variables: x_i -> x_{mapping[i]} (1-based).

        ``mapping`` maps old indices to new ones in a ring of ``nvars``
        variables (default: same ring); unmapped variables must not occur.
        """
        nvars = self.nvars if nvars is None else nvars
        target = PolyRing.get(nvars)
        src = self.ring
        t = {}
        for k, c in self._t.items():
            e = src.exps(k)
            ne = [0] * nvars
            for i, ei in enumerate(e):
                if ei:
                    ne[mapping[i + 1] - 1] += ei
            nk = target.key(tuple(ne))
            v = t.get(nk, 0) + c
            if v:
                t[nk] = _q(v)
            else:
                t.pop(nk, None)
        return Polynomial._raw(target, t)

    def substitute(self, values: dict, nvars=None) -> "Polynomial":
        """Substitute polynomials for variables.

        ``values`` maps 1-based variable indices to Polynomials living in a ring
        with ``nvars`` variables (default: same ring); variables not in
        ``values`` are kept as the same-index variable of the target ring.
        """
        nvars = self.nvars if nvars is None else nvars
        images = []
        for i in range(1, self.nvars + 1):
            if i in values:
                images.append(values[i])
            else:
                images.append(Polynomial.var(i, nvars))
        powers = [dict() for _ in images]
        result = Polynomial.zero(nvars)
        for e, c in self.items():
            term = Polynomial.constant(c, nvars)
            for i, ei in enumerate(e):
                if ei:
                    p = powers[i].get(ei)
                    if p is None:
                        p = powers[i][ei] = images[i] ** ei
                    term = term * p
            result = result + term
        return result

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.items():
            v = Fraction(c)
            for x, ei in zip(point, e):
                if ei:
                    v *= Fraction(x) ** ei
            total += v
        return _q(total)

    def integer_content(self):
        """Return (content, primitive part) with integer coefficients."""
        if not self._t:
            return 1, self
        den = 1
        for c in self._t.values():
            if type(c) is Fraction:
                den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self._t.values()]
        g = math.gcd(*ints)
        if self._t[max(self._t)] < 0:
            g = -g
        return Fraction(g, den), Polynomial._raw(
            self.ring, {k: int(c * den) // g for k, c in self._t.items()})

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(f"x{i + 1}" if ei == 1 else f"x{i + 1}^{ei}"
                            for i, ei in enumerate(e) if ei)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self.nvars}, '{self}')"


# -- parsing ----------------------------------------------------------------
_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\*\*|[-+*/^()]))")


class PolynomialParseError(ValueError):
    pass


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse the syntax produced by ``str(Polynomial)`` (and a bit more)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialParseError(f"unexpected character at column {pos + 1}: {text[pos:pos + 8]!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            i = int(var)
            if not 1 <= i <= nvars:
                raise PolynomialParseError(f"variable x{i} outside x1..x{nvars}")
            tokens.append(("var", i))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None)

    def take():
        nonlocal idx
        tok = peek()
        idx += 1
        return tok

    def expr():
        node = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = unary()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            rhs = unary()
            if op == "*":
                node = node * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolynomialParseError("division only by non-zero constants")
                node = node.scale(Fraction(1) / Fraction(rhs.constant_term()))
        return node

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num":
                raise PolynomialParseError("exponent must be a non-negative integer")
            return base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.constant(val, nvars)
        if kind == "var":
            return Polynomial.var(val, nvars)
        if (kind, val) == ("op", "("):
            node = expr()
            if take() != ("op", ")"):
                raise PolynomialParseError("missing closing parenthesis")
            return node
        raise PolynomialParseError(f"unexpected token {val!r}")

    if not tokens:
        raise PolynomialParseError("empty polynomial")
    result = expr()
    if idx != len(tokens):
        raise PolynomialParseError(f"trailing tokens after position {idx}")
    return result


# -- operations ---------------------------------------------------------------
def arith(op: str, f: Polynomial, g: Polynomial) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "exact_div":
        return f.exact_div(g)
    raise ValueError(f"unknown operation {op!r}")


def product(factors, nvars) -> Polynomial:
    result = Polynomial.one(nvars)
    for f in factors:
        result = result * f
    return result


def _linear_pair(form):
    """(i, j) with form == x_i - x_j, or None."""
    if isinstance(form, tuple) and len(form) == 2:
        return form
    if not isinstance(form, Polynomial) or len(form) != 2 or form.degree != 1:
        return None
    (e1, c1), (e2, c2) = form.items()
    if {c1, c2} != {1, -1}:
        return None
    i = e1.index(1) + 1
    j = e2.index(1) + 1
    return (i, j) if c1 == 1 else (j, i)


def class_representatives(nvars, eqs):
    """Union-find over forms x_i - x_j; map each index to its class minimum."""
    parent = list(range(nvars + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for form in eqs:
        pair = _linear_pair(form)
        if pair is None or pair[0] == pair[1]:
            raise ValueError(f"not a difference of two distinct variables: {form}")
        a, b = find(pair[0]), find(pair[1])
        if a != b:
            parent[max(a, b)] = min(a, b)
    return {i: find(i) for i in range(1, nvars + 1)}


def reduce_mod_linears(f: Polynomial, eqs) -> Polynomial:
    """Canonical representative of f modulo an ideal generated by forms x_i - x_j.

    Every variable is replaced by the smallest-index variable of its class.
    """
    return f.rename(class_representatives(f.nvars, eqs))


def elementary_symmetric(j: int, omit, ell: int) -> Polynomial:
    """e_j in the variables x_1..x_ell other than x_v, v in ``omit``."""
    keep = [v for v in range(1, ell + 1) if v not in set(omit)]
    if not 0 <= j <= len(keep):
        raise ValueError(f"e_{j} undefined for {len(keep)} variables")
    r = PolyRing.get(ell)
    t = {}
    for subset in itertools.combinations(keep, j):
        e = [0] * ell
        for v in subset:
            e[v - 1] = 1
        t[r.key(tuple(e))] = 1
    return Polynomial._raw(r, t)


def graded_monomials(ell: int, d: int) -> list:
    """All exponent tuples of total degree d, decreasing in degrevlex."""
    if d < 0:
        return []
    out = []

    def rec(i, left, acc):
        if i == ell - 1:
            out.append(tuple(acc + [left]))
            return
        for e in range(left, -1, -1):
            rec(i + 1, left - e, acc + [e])

    if ell == 0:
        return [()] if d == 0 else []
    rec(0, d, [])
    r = PolyRing.get(ell)
    out.sort(key=r.key, reverse=True)
    return out


# -- determinants -------------------------------------------------------------
def _is_square(M):
    n = len(M)
    return all(len(row) == n for row in M)


def _strip_sparse_lines(M):
    """Cofactor-expand along rows/columns with at most one non-zero entry.

    Returns (sign * product of extracted entries, remaining minor) or
    (None, None) if the determinant is zero.
    """
    n = len(M)
    nvars = None
    for row in M:
        for e in row:
            nvars = e.nvars
            break
        break
    factor = Polynomial.one(nvars)
    rows = list(range(n))
    cols = list(range(n))
    changed = True
    while changed and rows:
        changed = False
        for ri, r_ in enumerate(rows):
            nz = [ci for ci, c in enumerate(cols) if M[r_][c]]
            if not nz:
                return None, None
            if len(nz) == 1:
                ci = nz[0]
                sign = -1 if (ri + ci) % 2 else 1
                factor = factor * M[r_][cols[ci]].scale(sign)
                del rows[ri]
                del cols[ci]
                changed = True
                break
        if changed:
            continue
        for ci, c in enumerate(cols):
            nz = [ri for ri, r_ in enumerate(rows) if M[r_][c]]
            if not nz:
                return None, None
            if len(nz) == 1:
                ri = nz[0]
                sign = -1 if (ri + ci) % 2 else 1
                factor = factor * M[rows[ri]][c].scale(sign)
                del rows[ri]
                del cols[ci]
                changed = True
                break
    return factor, [[M[r_][c] for c in cols] for r_ in rows]


def _has_repeated_line(M) -> bool:
    rows = [tuple(row) for row in M]
    cols = list(zip(*rows))
    return len(set(rows)) < len(rows) or len(set(cols)) < len(cols)


def numeric_determinant(M, point) -> Fraction:
    """det of M evaluated at a rational point, by exact Gaussian elimination."""
    A = [[Fraction(e.evaluate(point)) for e in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return det


def _leibniz_monomial(M, nvars):
    """Permutation expansion for a matrix whose entries are all monomials."""
    n = len(M)
    r = PolyRing.get(nvars)
    ents = [[(max(e._t), e._t[max(e._t)]) if e else None for e in row] for row in M]
    t = {}
    base = r.one
    used = [False] * n

    def rec(i, key, coeff, parity):
        if i == n:
            c = -coeff if parity else coeff
            v = t.get(key, 0) + c
            if v:
                t[key] = v
            else:
                t.pop(key, None)
            return
        row = ents[i]
        for j in range(n):
            if used[j]:
                continue
            ent = row[j]
            if ent is None:
                continue
            # inversions contributed: number of already used columns greater than j
            greater = sum(1 for jj in range(j + 1, n) if used[jj])
            used[j] = True
            rec(i + 1, key + ent[0] - base, coeff * ent[1], parity ^ (greater & 1))
            used[j] = False

    rec(0, base, 1, 0)
    return Polynomial._raw(r, {k: _q(c) for k, c in t.items()})


def _bareiss(M, nvars):
    n = len(M)
    A = [list(row) for row in M]
    sign = 1
    prev = Polynomial.one(nvars)
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return Polynomial.zero(nvars)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        p = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (p * A[i][j] - A[i][k] * A[k][j]).exact_div(prev)
            A[i][k] = Polynomial.zero(nvars)
        prev = p
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(M) -> Polynomial:
    """Exact determinant of a square matrix of Polynomials.

    Sparse rows/columns are expanded first; monomial matrices use the
    permutation expansion; anything else goes through fraction-free Bareiss
    elimination (row swaps on zero pivots).
    """
    if not _is_square(M):
        raise ValueError("determinant of a non-square matrix")
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = M[0][0].nvars
    factor, minor = _strip_sparse_lines(M)
    if factor is None:
        return Polynomial.zero(nvars)
    if not minor:
        return factor
    if _has_repeated_line(minor):
        return Polynomial.zero(nvars)
    if all(len(e) <= 1 for row in minor for e in row):
        return factor * _leibniz_monomial(minor, nvars)
    return factor * _bareiss(minor, nvars)


def cofactor_determinant(M) -> Polynomial:
    """Naive Laplace expansion along the first row (reference implementation)."""
    n = len(M)
    if n == 1:
        return M[0][0]
    nvars = M[0][0].nvars
    total = Polynomial.zero(nvars)
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_determinant(minor)
        total = total - term if j % 2 else total + term
    return total
