"""Closed-form evaluators for the wavefunction symmetric functions.

Both closed forms are sums over all n! permutations of the spectral
parameters; each summand is a product of small linear factors.  The
permutation sum is generated lexicographically via itertools; n is capped
(configurable) at 9 since 9! summands of exact rationals is the practical
desk limit.  No attempt is made to deduplicate the (n-m)!-fold redundancy
among permutations: correctness over speed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import SpinConfig
from .weights import LSiteParams

#: Permutation sums are refused above this n; raise it if you must.
MAX_PERMUTATION_N = 9


class CoincidentVariables(Exception):
    """Spectral parameters must be pairwise distinct (cross-factor poles)."""


class FrameViolation(Exception):
    """A partition does not fit its (N - n) x n frame."""


def _check_u(u: Sequence[Fraction]) -> None:
    if len(u) > MAX_PERMUTATION_N:
        raise ValueError(f"permutation sum capped at n = {MAX_PERMUTATION_N}")
    if len(set(u)) != len(u):
        raise CoincidentVariables(f"u must be pairwise distinct: {u}")


def f_triangular(
    t: Fraction,
    A: Fraction,
    B: Fraction,
    u: Sequence[Fraction],
    w: Sequence[Fraction],
    x: SpinConfig,
    include_prefactor: bool = True,
) -> Fraction:
    """Closed form of the triangular-boundary wavefunction.

    A sum over all permutations sigma of {1..n}; positions 1..m of sigma
    pair with the down-spin columns, positions m+1..n carry the boundary
    factors.  Divided by (n-m)! since the summand depends on sigma(m+1..n)
    only as a set.  ``include_prefactor=False`` drops that division; it
    exists purely as a corruption hook for negative controls.
    """
    n, N, m = len(u), x.N, x.m
    if len(w) != N:
        raise ValueError("need one w per lattice column")
    if m > n:
        raise ValueError(f"defined for m <= n, got m={m}, n={n}")
    _check_u(u)
    xs = x.positions
    one = Fraction(1)

    total = Fraction(0)
    for sigma in itertools.permutations(range(n)):
        term = one
        for j in range(m):
            uj = u[sigma[j]]
            for k in range(xs[j], N):
                term *= uj - t * w[k]
            for k in range(xs[j] - 1):
                term *= uj - w[k]
            term *= (1 - t) * (uj * uj - 1)
        for j in range(m):
            for k in range(j + 1, m):
                uj, uk = u[sigma[j]], u[sigma[k]]
                term *= (t * uj - uk) / (uj - uk) * (uj * uk - 1)
        for j in range(m, n):
            uj = u[sigma[j]]
            for k in range(N):
                term *= uj - t * w[k]
            for k in range(m):
                uk = u[sigma[k]]
                term *= (t * uj - uk) / (uj - uk) * (uj * uk - 1)
            term *= B * uj - A
        for j in range(m, n):
            for k in range(j + 1, n):
                term *= u[sigma[j]] * u[sigma[k]] - t
        total += term
    if include_prefactor:
        total /= math.factorial(n - m)
    return total


def of_ordinary(
    t: Fraction,
    sites: Sequence[LSiteParams],
    u: Sequence[Fraction],
    w: Sequence[Fraction],
    x: SpinConfig,
) -> Fraction:
    """Closed form of the ordinary wavefunction (no factorial prefactor)."""
    n, N = len(u), x.N
    if x.m != n:
        raise ValueError(f"needs |x| = n, got |x|={x.m}, n={n}")
    if len(sites) != N or len(w) != N:
        raise ValueError("need one site six-tuple and one w per lattice site")
    _check_u(u)
    xs = x.positions

    total = Fraction(0)
    for sigma in itertools.permutations(range(n)):
        term = Fraction(1)
        for j in range(n):
            uj = u[sigma[j]]
            for k in range(xs[j], N):
                term *= sites[k].a * uj + sites[k].b * w[k]
            for k in range(xs[j] - 1):
                term *= sites[k].e * uj + sites[k].f * w[k]
            term *= (1 - t) * sites[xs[j] - 1].c * uj
        for j in range(n):
            for k in range(j + 1, n):
                uj, uk = u[sigma[j]], u[sigma[k]]
                term *= (t * uj - uk) / (uj - uk)
        total += term
    return total


# --- partitions and the beta-deformed Schur determinant ---------------------


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing parts fitting in an (N - n) x n frame."""

    parts: tuple[int, ...]
    N: int

    def __post_init__(self):
        n = len(self.parts)
        if n > self.N:
            raise FrameViolation(f"more parts than sites: {self.parts} in N={self.N}")
        prev = self.N - n
        for p in self.parts:
            if not 0 <= p <= prev:
                raise FrameViolation(
                    f"{self.parts} does not fit the ({self.N - n}) x {n} frame"
                )
            prev = p

    @property
    def n(self) -> int:
        return len(self.parts)


def x_to_lambda(x: SpinConfig) -> Partition:
    """Translate down-spin positions to a partition: lam_j = x_{n-j+1} - n + j - 1."""
    n = x.m
    parts = tuple(x.positions[n - j] - n + j - 1 for j in range(1, n + 1))
    return Partition(parts, x.N)


def lambda_to_x(lam: Partition) -> SpinConfig:
    """Inverse translation; round-trips exactly with :func:`x_to_lambda`."""
    n = lam.n
    positions = tuple(sorted(lam.parts[j - 1] + n - j + 1 for j in range(1, n + 1)))
    return SpinConfig(lam.N, positions)


@dataclass(frozen=True)
class GrothendieckPoint:
    """Evaluation point: pairwise distinct z and an invertible deformation beta."""

    z: tuple[Fraction, ...]
    beta: Fraction

    def __post_init__(self):
        if self.beta == 0:
            raise ZeroDivisionError("beta must be invertible")
        if len(set(self.z)) != len(self.z):
            raise CoincidentVariables(f"z must be pairwise distinct: {self.z}")


def bareiss_determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-free Bareiss elimination; exact for any field entries."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def grothendieck(lam: Partition, point: GrothendieckPoint) -> Fraction:
    """The beta-deformed Schur determinant divided by the Vandermonde.

    det_n( z_j^(lam_k + n - k) (1 + beta z_j)^(k-1) ) / prod_{j<k}(z_j - z_k);
    the division is exact since the determinant is alternating in z.
    """
    n = lam.n
    if len(point.z) != n:
        raise ValueError(f"need {n} variables, got {len(point.z)}")
    z, beta = point.z, point.beta
    matrix = [
        [z[j] ** (lam.parts[k] + n - 1 - k) * (1 + beta * z[j]) ** k for k in range(n)]
        for j in range(n)
    ]
    vandermonde = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            vandermonde *= z[j] - z[k]
    return bareiss_determinant(matrix) / vandermonde


def grothendieck_specialization(
    n: int, N: int, beta: Fraction, u: Sequence[Fraction], t: Fraction = Fraction(0)
) -> tuple[list[LSiteParams], list[Fraction], list[Fraction], Fraction]:
    """Homogeneous specialization mapping the ordinary closed form onto
    the beta-deformed Schur polynomials.

    Returns (sites, w, z, prefactor): per-site weights
    (1, t*beta, 1, 1, -1/beta, -1) validated at the given t, homogeneous
    w_j = 1, the variable map z_j = -1/beta - 1/u_j, and the prefactor
    (-beta)^(-n(n-1)/2) * prod_j u_j^N.
    """
    if beta == 0:
        raise ZeroDivisionError("beta must be nonzero")
    if any(uj == 0 for uj in u):
        raise ZeroDivisionError("all u_j must be nonzero")
    if len(u) != n:
        raise ValueError("need exactly n spectral parameters")
    site = LSiteParams(
        a=Fraction(1),
        b=t * beta,
        c=Fraction(1),
        d=Fraction(1),
        e=-1 / beta,
        f=Fraction(-1),
    )
    site.validate(t)
    sites = [site] * N
    w = [Fraction(1)] * N
    z = [-1 / beta - 1 / uj for uj in u]
    prefactor = (-beta) ** (-(n * (n - 1) // 2))
    for uj in u:
        prefactor *= uj**N
    return sites, w, z, prefactor
