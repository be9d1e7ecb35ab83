"""Degreewise dimension of D(A) by plain linear algebra over the monomial basis.

Used as an oracle against resolutions: nothing here touches Groebner bases.
For a homogeneous derivation theta of degree d with unknown coefficients
u[k, m] (variable k, monomial m), alpha | theta(alpha) means theta(alpha)
vanishes after eliminating the last variable of alpha.
"""

from __future__ import annotations

from math import comb

from .arrangement import normalize_form, restrict_polynomial
from .linalg import RowEchelon
from .poly import Polynomial, graded_monomials


def _difference_pair(form):
    nz = [k for k, c in enumerate(form) if c]
    if len(nz) == 2 and form[nz[0]] == -form[nz[1]]:
        return nz[0], nz[1]
    return None


def hilbert_oracle(constraints, ell: int, d: int) -> int:
    """dim_Q of {theta in S_d^ell : alpha | theta(alpha) for each constraint form alpha}."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    monos = graded_monomials(ell, d)
    nm = len(monos)
    forms = [normalize_form(f) for f in constraints]
    ech = RowEchelon()
    for form in forms:
        rows = {}
        coeffs = [(k, a) for k, a in enumerate(form) if a]
        pair = _difference_pair(form)
        for mi, e in enumerate(monos):
            if pair is not None:
                i, j = pair
                img = list(e)
                img[i] += img[j]
                img[j] = 0
                image = {tuple(img): 1}
            else:
                p = restrict_polynomial(Polynomial.monomial(e), form)
                image = dict(p.items())
            for mu, c in image.items():
                row = rows.setdefault(mu, {})
                for k, a in coeffs:
                    col = k * nm + mi
                    v = row.get(col, 0) + a * c
                    if v:
                        row[col] = v
                    else:
                        row.pop(col, None)
        for row in rows.values():
            if row:
                ech.add(row)
    return ell * nm - ech.rank


def free_dimension(ell: int, d: int) -> int:
    """dim of the degree-d piece of S^ell."""
    return ell * comb(d + ell - 1, ell - 1) if d >= 0 else 0
