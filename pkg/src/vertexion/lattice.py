"""Brute-force lattice contraction: the independent oracle.

State vectors are dense amplitude arrays over a 2^L tensor-product spin
basis.  The basis index is the bit string of spins with the first tensor
factor as the most significant bit.  Operators are applied as local one-
or two-site updates; a single contraction is sequential because operator
order matters, but independent contractions share no state.

The triangular-boundary construction does not conserve down-spin number
(the boundary matrix has a spin-flipping lower-left entry), so no sector
pruning is attempted anywhere: the oracle's job is to be obviously
correct, not fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .weights import (
    KParams,
    LSiteParams,
    RParams,
    _l_element_raw,
    k_element,
    r_element,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SpinConfig:
    """Strictly increasing down-spin positions x_1 < ... < x_m in {1..N}."""

    N: int
    positions: tuple[int, ...]

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        prev = 0
        for p in self.positions:
            if not (prev < p <= self.N):
                raise ValueError(
                    f"positions must be strictly increasing in 1..{self.N}: "
                    f"{self.positions}"
                )
            prev = p

    @property
    def m(self) -> int:
        return len(self.positions)

    def basis_index(self) -> int:
        """Index of the basis state with down spins exactly at ``positions``."""
        idx = 0
        for p in self.positions:
            idx |= 1 << (self.N - p)
        return idx


@dataclass
class FockVector:
    """Dense amplitude vector over a 2^L spin basis."""

    site_count: int
    amplitudes: list[Fraction] = field(default_factory=list)

    def __post_init__(self):
        if not self.amplitudes:
            self.amplitudes = [_ZERO] * (1 << self.site_count)
        if len(self.amplitudes) != 1 << self.site_count:
            raise ValueError("amplitude length must be exactly 2^site_count")

    @classmethod
    def vacuum(cls, site_count: int) -> "FockVector":
        v = cls(site_count)
        v.amplitudes[0] = Fraction(1)
        return v


def apply_two_site(element, site_a: int, site_b: int, v: FockVector) -> FockVector:
    """Apply a two-site operator at (site_a, site_b), identity elsewhere.

    ``element(ga, gb, aa, ab)`` is the operator block; sites are 0-based
    tensor-factor positions.  Cost is O(2^L) per nonzero block.
    """
    L = v.site_count
    if not (0 <= site_a < L and 0 <= site_b < L) or site_a == site_b:
        raise IndexError(f"bad site pair ({site_a}, {site_b}) for {L} sites")
    bit_a = L - 1 - site_a
    bit_b = L - 1 - site_b
    out = FockVector(L)
    amps = out.amplitudes
    for idx, amp in enumerate(v.amplitudes):
        if amp == 0:
            continue
        aa = (idx >> bit_a) & 1
        ab = (idx >> bit_b) & 1
        rest = idx & ~(1 << bit_a) & ~(1 << bit_b)
        for ga in (0, 1):
            for gb in (0, 1):
                val = element(ga, gb, aa, ab)
                if val != 0:
                    amps[rest | (ga << bit_a) | (gb << bit_b)] += val * amp
    return out


def apply_one_site(element, site: int, v: FockVector) -> FockVector:
    """Apply a one-site operator ``element(g, a)`` at ``site``."""
    L = v.site_count
    if not 0 <= site < L:
        raise IndexError(f"site {site} out of range for {L} sites")
    bit = L - 1 - site
    out = FockVector(L)
    amps = out.amplitudes
    for idx, amp in enumerate(v.amplitudes):
        if amp == 0:
            continue
        a = (idx >> bit) & 1
        rest = idx & ~(1 << bit)
        for g in (0, 1):
            val = element(g, a)
            if val != 0:
                amps[rest | (g << bit)] += val * amp
    return out


# --- triangular boundary model ----------------------------------------------


@dataclass(frozen=True)
class TriangularModel:
    """Lattice data for the triangular-boundary construction.

    n boundary rows with spectral parameters u_1..u_n, N bulk columns with
    parameters w_1..w_N.  All u_j must be nonzero (the boundary matrix
    contains u^-1).  n = 0 is accepted as the empty-product base case used
    by recursion checks.
    """

    N: int
    n: int
    r: RParams
    k: KParams
    u: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        if self.N < 1 or self.n < 0:
            raise ValueError("need N >= 1 and n >= 0")
        if len(self.u) != self.n or len(self.w) != self.N:
            raise ValueError("parameter list lengths must match n and N")
        if any(uj == 0 for uj in self.u):
            raise ZeroDivisionError("all u_j must be nonzero")


def triangular_state_vector(
    model: TriangularModel, k_upper: Fraction = _ZERO
) -> FockVector:
    """Contract the n-row triangular lattice into a 2^N state vector.

    Sites are ordered (-n, ..., -1, 1, ..., N); row j applies, in order,
    the boundary matrix at site -j, the auxiliary crossings at
    (-j, -j+1), ..., (-j, -1) with arguments (u_j u_k, 1), then the bulk
    crossings at (-j, 1), ..., (-j, N) with arguments (u_j, w_k).  Rows
    are applied j = n first down to j = 1, then the auxiliary sites are
    projected onto all-up.

    ``k_upper`` perturbs the identically-zero (0,1) boundary entry; it
    exists purely as a corruption hook for negative controls.
    """
    n, N = model.n, model.N
    L = n + N
    v = FockVector.vacuum(L)

    def k_el(g, a, u):
        if (g, a) == (0, 1) and k_upper != 0:
            return k_upper
        return k_element(g, a, u, model.k)

    for j in range(n, 0, -1):
        uj = model.u[j - 1]
        aux = n - j  # tensor position of site -j
        v = apply_one_site(lambda g, a: k_el(g, a, uj), aux, v)
        for kk in range(j - 1, 0, -1):
            x = uj * model.u[kk - 1]
            v = apply_two_site(
                lambda ga, gb, aa, ab, x=x: r_element(
                    ga, gb, aa, ab, x, Fraction(1), model.r
                ),
                aux,
                n - kk,
                v,
            )
        for kk in range(1, N + 1):
            wk = model.w[kk - 1]
            v = apply_two_site(
                lambda ga, gb, aa, ab, wk=wk: r_element(
                    ga, gb, aa, ab, uj, wk, model.r
                ),
                aux,
                n + kk - 1,
                v,
            )

    # project the n auxiliary sites onto all-up: they are the leading bits
    out = FockVector(N)
    out.amplitudes = v.amplitudes[: 1 << N]
    return out


def wavefunction_triangular(
    model: TriangularModel, x: SpinConfig, k_upper: Fraction = _ZERO
) -> Fraction:
    """Amplitude of the triangular state vector at down-spin positions x."""
    if x.N != model.N:
        raise ValueError(f"config frame N={x.N} does not match model N={model.N}")
    psi = triangular_state_vector(model, k_upper=k_upper)
    return psi.amplitudes[x.basis_index()]


def domain_wall_partition_function(model: TriangularModel) -> Fraction:
    """The m = N special case: amplitude at the fully down-spin state."""
    x = SpinConfig(model.N, tuple(range(1, model.N + 1)))
    return wavefunction_triangular(model, x)


# --- ordinary (generalized six-vertex) model --------------------------------


@dataclass(frozen=True)
class OrdinaryModel:
    """Lattice data for the ordinary wavefunction construction.

    N sites each carrying a validated six-tuple of weights, n spectral
    parameters for the n creation layers; n <= N so that an n-down-spin
    dual state exists.
    """

    N: int
    n: int
    r: RParams
    sites: tuple[LSiteParams, ...]
    u: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        if self.N < 1 or not 0 <= self.n <= self.N:
            raise ValueError("need N >= 1 and 0 <= n <= N")
        if len(self.sites) != self.N:
            raise ValueError("need one site six-tuple per lattice site")
        if len(self.u) != self.n or len(self.w) != self.N:
            raise ValueError("parameter list lengths must match n and N")
        for s in self.sites:
            s.validate(self.r.t)


def apply_creation_operator(
    model: OrdinaryModel, u: Fraction, v: FockVector
) -> FockVector:
    """Apply the down-spin creation operator B(u) to a 2^N vector.

    B(u) is the <0|..|1> auxiliary element of the row monodromy: embed the
    state with an auxiliary down spin prepended, sweep the site operators
    from site 1 to site N, project the auxiliary factor onto up.
    """
    N = model.N
    big = FockVector(N + 1)
    top = 1 << N  # auxiliary factor is the most significant bit
    for idx, amp in enumerate(v.amplitudes):
        big.amplitudes[top | idx] = amp
    for j in range(1, N + 1):
        s = model.sites[j - 1]
        wj = model.w[j - 1]
        big = apply_two_site(
            lambda ga, gb, aa, ab, s=s, wj=wj: _l_element_raw(
                ga, gb, aa, ab, u, wj, s, model.r
            ),
            0,
            j,
            big,
        )
    out = FockVector(N)
    out.amplitudes = big.amplitudes[: 1 << N]
    return out


def ordinary_state_vector(model: OrdinaryModel) -> FockVector:
    """B(u_1) ... B(u_n) applied to the all-up vacuum."""
    v = FockVector.vacuum(model.N)
    for j in range(model.n, 0, -1):
        v = apply_creation_operator(model, model.u[j - 1], v)
    return v


def ordinary_wavefunction(model: OrdinaryModel, x: SpinConfig) -> Fraction:
    """Amplitude of the ordinary state vector at down-spin positions x.

    Nonzero only when |x| = n (each creation layer adds exactly one down
    spin); other m are accepted and honestly return 0.
    """
    if x.N != model.N:
        raise ValueError(f"config frame N={x.N} does not match model N={model.N}")
    psi = ordinary_state_vector(model)
    return psi.amplitudes[x.basis_index()]
