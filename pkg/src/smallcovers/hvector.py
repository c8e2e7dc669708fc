"""h-vectors of simple polytopes.

The h-vector is read off the polynomial

    Phi(t) = (t - 1)^n + sum_i f_i (t - 1)^(n - 1 - i) = sum_i h_i t^(n - i)

where ``f_i`` counts the i-simplices of the dual simplicial sphere, i.e. the
faces of the polytope of codimension ``i + 1``. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InvalidPolytopeError, SmallCoverError
from .polytope import Polytope, dual_f_vector

__all__ = ["PhiPolynomial", "phi_polynomial", "h_vector", "h_vector_closed_form", "h1_closed_form"]


@dataclass(frozen=True)
class PhiPolynomial:
    degree: int
    coefficients: tuple[int, ...]  # h_0 .. h_n; h_i multiplies t^(n - i)

    def __call__(self, t):
        n = self.degree
        return sum(h * t ** (n - i) for i, h in enumerate(self.coefficients))

    @property
    def h(self) -> tuple[int, ...]:
        return self.coefficients


def _shifted_power(m: int) -> list[int]:
    """Coefficients of (t - 1)^m, highest power first."""
    return [comb(m, j) * (-1) ** j for j in range(m + 1)]


def phi_polynomial(dual_f: Sequence[int], n: int) -> PhiPolynomial:
    if n < 1:
        raise SmallCoverError(f"degree must be at least 1, got {n}")
    if len(dual_f) != n:
        raise SmallCoverError(f"expected {n} face counts, got {len(dual_f)}")
    if any(f < 0 for f in dual_f):
        raise SmallCoverError("face counts must be nonnegative")
    coeffs = _shifted_power(n)
    for i, f in enumerate(dual_f):
        m = n - 1 - i
        # (t-1)^m fills coefficients of t^m..t^0, i.e. positions n-m..n
        for j, c in enumerate(_shifted_power(m)):
            coeffs[n - m + j] += f * c
    return PhiPolynomial(n, tuple(coeffs))


def h_vector_closed_form(V: int, E: int, F: int) -> tuple[int, int, int, int]:
    """h-vector of a simple 3-polytope directly from its vertex/edge/face counts."""
    return (1, F - 3, 3 - 2 * F + E, V - E + F - 1)


def h_vector(p: Polytope) -> tuple[int, ...]:
    """h-vector of a simple polytope via the expansion of Phi.

    For 3-polytopes the closed form in (V, E, F) is evaluated as well and the
    two must agree.
    """
    dual_f = dual_f_vector(p)
    h = phi_polynomial(dual_f, p.dim).coefficients
    if p.dim == 3:
        F, E, V = dual_f
        closed = h_vector_closed_form(V, E, F)
        if closed != h:
            raise AssertionError(f"Phi expansion {h} disagrees with closed form {closed}")
    return h


def h1_closed_form(p: Polytope) -> int:
    """h_1 = V/2 - 1, valid for simple 3-polytopes (E = 3V/2 and Euler)."""
    if p.dim != 3:
        raise SmallCoverError("h1_closed_form applies to 3-polytopes")
    V = p.n_vertices
    if V % 2:
        raise InvalidPolytopeError(f"odd vertex count {V}: not a simple 3-polytope")
    h1 = V // 2 - 1
    assert h1 == h_vector(p)[1]
    return h1
