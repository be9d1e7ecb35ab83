"""Exact sparse linear algebra over Q (integer-preserving row echelon)."""

from __future__ import annotations

import math
from fractions import Fraction


def _as_int_row(row) -> dict:
    if not isinstance(row, dict):
        row = {k: c for k, c in enumerate(row) if c}
    den = 1
    for c in row.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    return {k: int(c * den) for k, c in row.items() if c}


class RowEchelon:
    """Incremental echelon form; ``add`` returns True when the row is independent."""

    def __init__(self):
        self.pivots = {}

    def reduce(self, row) -> dict:
        row = _as_int_row(row)
        pivots = self.pivots
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                break
            a, b = p[c], row[c]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: v * a for k, v in row.items()} if a != 1 else dict(row)
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            if new:
                g = math.gcd(*new.values())
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            row = new
        return row

    def add(self, row) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def exact_rank(rows) -> int:
    ech = RowEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank
