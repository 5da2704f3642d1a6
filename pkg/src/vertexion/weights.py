"""Local weight generators and exact checkers for their algebraic relations.

Three families of local weights:

* the two-parameter bulk weight matrix R(u, w) with quantum-group
  parameter t,
* the triangular boundary matrix K(u) with parameters A, B (its (0,1)
  entry is identically zero),
* the generalized per-site weight matrix L(u, w) with a six-tuple
  (a, b, c, d, e, f) constrained by cd + af = 0 and tcd + be = 0.

Operators on k-fold tensor products are dense 2^k x 2^k arrays of exact
rationals; basis index is the bit string of spins with the first tensor
factor as the most significant bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[Fraction]]

_ZERO = Fraction(0)


class ConstraintViolation(Exception):
    """A six-tuple of site parameters violates its defining relations."""


@dataclass(frozen=True)
class RParams:
    t: Fraction


@dataclass(frozen=True)
class KParams:
    A: Fraction
    B: Fraction


@dataclass(frozen=True)
class LSiteParams:
    """One six-tuple of site parameters (a, b, c, d, e, f).

    The defining relations cd + af = 0 and tcd + be = 0 involve t, which
    the tuple does not carry, so validation happens via :meth:`validate`
    wherever a t is in scope (model constructors, ``l_element``).
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    def validate(self, t: Fraction) -> None:
        if self.c * self.d + self.a * self.f != 0:
            raise ConstraintViolation(f"cd + af != 0 for {self}")
        if t * self.c * self.d + self.b * self.e != 0:
            raise ConstraintViolation(f"tcd + be != 0 for {self} at t={t}")

    def is_valid(self, t: Fraction) -> bool:
        try:
            self.validate(t)
        except ConstraintViolation:
            return False
        return True

    @classmethod
    def solve(
        cls,
        a: Fraction,
        b: Fraction,
        c: Fraction,
        d: Fraction,
        t: Fraction,
    ) -> "LSiteParams":
        """Complete (a, b, c, d) to a constraint-satisfying six-tuple.

        f and e are solved exactly from the two relations; a and b must be
        nonzero.
        """
        if a == 0 or b == 0:
            raise ConstraintViolation("solve requires a != 0 and b != 0")
        return cls(a=a, b=b, c=c, d=d, e=-t * c * d / b, f=-c * d / a)


def six_vertex_site(t: Fraction) -> LSiteParams:
    """The specialization reducing L to R: (1, -t, 1, 1, 1, -1)."""
    return LSiteParams(
        a=Fraction(1), b=-t, c=Fraction(1), d=Fraction(1), e=Fraction(1), f=Fraction(-1)
    )


def r_element(
    gamma: int, delta: int, alpha: int, beta: int, u: Fraction, w: Fraction, p: RParams
) -> Fraction:
    """Matrix element <gamma| <delta| R(u, w) |alpha> |beta>.

    Vanishes unless alpha + beta == gamma + delta (ice rule).
    """
    t = p.t
    key = (gamma, delta, alpha, beta)
    if key == (0, 0, 0, 0) or key == (1, 1, 1, 1):
        return u - t * w
    if key == (0, 1, 0, 1):
        return t * (u - w)
    if key == (0, 1, 1, 0):
        return (1 - t) * u
    if key == (1, 0, 0, 1):
        return (1 - t) * w
    if key == (1, 0, 1, 0):
        return u - w
    return _ZERO


def k_element(gamma: int, alpha: int, u: Fraction, p: KParams) -> Fraction:
    """Matrix element <gamma| K(u) |alpha>; the (0, 1) entry is zero."""
    if (gamma, alpha) == (0, 0):
        return p.B * u - p.A
    if (gamma, alpha) == (0, 1):
        return _ZERO
    if (gamma, alpha) == (1, 1):
        return p.B / u - p.A
    return u - 1 / u


def _l_element_raw(
    gamma: int,
    delta: int,
    alpha: int,
    beta: int,
    u: Fraction,
    w: Fraction,
    s: LSiteParams,
    p: RParams,
) -> Fraction:
    t = p.t
    key = (gamma, delta, alpha, beta)
    if key == (0, 0, 0, 0):
        return s.a * u + s.b * w
    if key == (0, 1, 0, 1):
        return s.a * t * u + s.b * w
    if key == (0, 1, 1, 0):
        return (1 - t) * s.c * u
    if key == (1, 0, 0, 1):
        return (1 - t) * s.d * w
    if key == (1, 0, 1, 0):
        return s.e * u + s.f * w
    if key == (1, 1, 1, 1):
        return s.e * u + s.f * t * w
    return _ZERO


def l_element(
    gamma: int,
    delta: int,
    alpha: int,
    beta: int,
    u: Fraction,
    w: Fraction,
    s: LSiteParams,
    p: RParams,
) -> Fraction:
    """Matrix element of the generalized site operator; ice rule applies."""
    s.validate(p.t)
    return _l_element_raw(gamma, delta, alpha, beta, u, w, s, p)


# --- dense operators on small tensor products -------------------------------


def _zeros(n: int) -> Matrix:
    return [[_ZERO] * n for _ in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = _zeros(n)
    for i in range(n):
        row = a[i]
        for k in range(n):
            if row[k] == 0:
                continue
            bk = b[k]
            oi = out[i]
            for j in range(n):
                if bk[j] != 0:
                    oi[j] += row[k] * bk[j]
    return out


def matmul_chain(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = matmul(out, m)
    return out


def embed_two_site(element, site_a: int, site_b: int, num_sites: int) -> Matrix:
    """Dense 2^L matrix of a two-site operator, identity elsewhere.

    ``element(ga, gb, aa, ab)`` gives the block; ``site_a`` is the factor
    carrying the first index pair.  Factor 0 is the most significant bit.
    """
    size = 1 << num_sites
    bit_a = num_sites - 1 - site_a
    bit_b = num_sites - 1 - site_b
    out = _zeros(size)
    for col in range(size):
        aa = (col >> bit_a) & 1
        ab = (col >> bit_b) & 1
        rest = col & ~(1 << bit_a) & ~(1 << bit_b)
        for ga, gb in itertools.product((0, 1), repeat=2):
            val = element(ga, gb, aa, ab)
            if val != 0:
                out[rest | (ga << bit_a) | (gb << bit_b)][col] = val
    return out


def embed_one_site(element, site: int, num_sites: int) -> Matrix:
    """Dense 2^L matrix of a one-site operator ``element(g, a)``."""
    size = 1 << num_sites
    bit = num_sites - 1 - site
    out = _zeros(size)
    for col in range(size):
        a = (col >> bit) & 1
        rest = col & ~(1 << bit)
        for g in (0, 1):
            val = element(g, a)
            if val != 0:
                out[rest | (g << bit)][col] = val
    return out


# --- relation checkers ------------------------------------------------------


def check_yang_baxter(u: Fraction, v: Fraction, w: Fraction, p: RParams) -> bool:
    """Exact check of R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)."""

    def r_op(site_a, site_b, x, y):
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, x, y, p), site_a, site_b, 3
        )

    lhs = matmul_chain(r_op(0, 1, u, v), r_op(0, 2, u, w), r_op(1, 2, v, w))
    rhs = matmul_chain(r_op(1, 2, v, w), r_op(0, 2, u, w), r_op(0, 1, u, v))
    return lhs == rhs


def check_reflection(u: Fraction, w: Fraction, p: RParams, k: KParams) -> bool:
    """Exact check of the boundary relation on two factors.

    Single-argument weight matrices are read as R(x) = R(x, 1); see the
    README for why this convention is the consistent one.
    """
    if u == 0 or w == 0:
        raise ZeroDivisionError("boundary relation needs nonzero spectral parameters")

    def r_ab(x):
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, x, Fraction(1), p), 0, 1, 2
        )

    def r_ba(x):
        # roles of the two factors swapped: factor 1 carries the first slot
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(gb, ga, ab, aa, x, Fraction(1), p), 0, 1, 2
        )

    def k_at(site, x):
        return embed_one_site(lambda g, a: k_element(g, a, x, k), site, 2)

    k_a = lambda x: k_at(0, x)
    k_b = lambda x: k_at(1, x)
    lhs = matmul_chain(r_ba(u / w), k_b(u), r_ab(u * w), k_a(w))
    rhs = matmul_chain(k_a(w), r_ba(u * w), k_b(u), r_ab(u / w))
    return lhs == rhs


def check_rll(
    u1: Fraction, u2: Fraction, w: Fraction, s: LSiteParams, p: RParams
) -> bool:
    """Exact check of R12(u1,u2) L1(u1,w) L2(u2,w) = L2 L1 R12.

    Deliberately does not gate on the site constraints: the relation fails
    for generic unconstrained six-tuples, and callers use that as a
    negative control.
    """

    def r_op(x, y):
        return embed_two_site(
            lambda ga, gb, aa, ab: r_element(ga, gb, aa, ab, x, y, p), 0, 1, 3
        )

    def l_op(site, x):
        return embed_two_site(
            lambda ga, gb, aa, ab: _l_element_raw(ga, gb, aa, ab, x, w, s, p),
            site,
            2,
            3,
        )

    lhs = matmul_chain(r_op(u1, u2), l_op(0, u1), l_op(1, u2))
    rhs = matmul_chain(l_op(1, u2), l_op(0, u1), r_op(u1, u2))
    return lhs == rhs
