"""Polynomial vector fields sum(f_k d/dx_k) over Q[x1..xl]."""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import FreeModuleElement, GradingError
from .poly import Polynomial


@dataclass(frozen=True)
class Derivation:
    """Coefficient k is the coefficient of d/dx_{k+1}."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a derivation needs at least one variable")
        n = self.coeffs[0].nvars
        if len(self.coeffs) != n or any(c.nvars != n for c in self.coeffs):
            raise ValueError("derivation length must match the variable count")

    @classmethod
    def zero(cls, ell):
        return cls(tuple(Polynomial.zero(ell) for _ in range(ell)))

    @classmethod
    def partial(cls, k, coeff: Polynomial):
        """coeff * d/dx_k (1-based k)."""
        ell = coeff.nvars
        return cls(tuple(coeff if i == k else Polynomial.zero(ell) for i in range(1, ell + 1)))

    @classmethod
    def from_element(cls, elem: FreeModuleElement):
        return cls(elem.components)

    @property
    def ell(self) -> int:
        return len(self.coeffs)

    def to_element(self) -> FreeModuleElement:
        return FreeModuleElement(self.coeffs, (0,) * self.ell)

    @property
    def degree(self):
        """Common degree of the non-zero coefficients (None for the zero field)."""
        degs = {c.degree for c in self.coeffs if c}
        if not degs:
            return None
        if len(degs) > 1 or not all(c.is_homogeneous() for c in self.coeffs if c):
            raise GradingError("inhomogeneous derivation")
        return degs.pop()

    def is_zero(self):
        return not any(self.coeffs)

    def __call__(self, f: Polynomial) -> Polynomial:
        out = Polynomial.zero(self.ell)
        for k, c in enumerate(self.coeffs, start=1):
            if c:
                d = f.diff(k)
                if d:
                    out = out + c * d
        return out

    def apply_linear(self, form) -> Polynomial:
        """Value on a linear form given by its coefficient vector."""
        out = Polynomial.zero(self.ell)
        for a, c in zip(form, self.coeffs):
            if a and c:
                out = out + c.scale(a)
        return out

    def __add__(self, other):
        return Derivation(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Derivation(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Derivation(tuple(-a for a in self.coeffs))

    def __mul__(self, p):
        if isinstance(p, Polynomial):
            return Derivation(tuple(p * a for a in self.coeffs))
        return Derivation(tuple(a.scale(p) for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        parts = [f"({c})*d{k}" for k, c in enumerate(self.coeffs, start=1) if c]
        return " + ".join(parts) if parts else "0"


def linear_combination(coeffs, derivs) -> Derivation:
    acc = Derivation.zero(derivs[0].ell)
    for a, d in zip(coeffs, derivs):
        if a:
            acc = acc + d * a
    return acc
