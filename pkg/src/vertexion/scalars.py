"""Exact rational arithmetic, parsing, sampling and interpolation utilities.

Every quantity in this package is an exact rational number.  We use
:class:`fractions.Fraction` directly as the scalar type: it is arbitrary
precision, always canonical (positive denominator, reduced), and its
arithmetic is exact, so identity checks are plain equality with tolerance
zero.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

#: Sampling range for random scalars.  Small numerators/denominators keep
#: bignum growth bounded through repeated 2^L tensor contractions.
NUMERATOR_RANGE = (-99, 99)
DENOMINATOR_RANGE = (1, 20)


class ExhaustedRange(Exception):
    """The avoid-set left no admissible value in the sampling range."""


class InconsistentSample(Exception):
    """Extra sample points do not lie on the interpolating polynomial."""


def parse_rational(text: str) -> Fraction:
    """Parse a scalar serialized as "p" or "p/q".

    Decimal notation is rejected on purpose: exactness is the product, and
    accepting floats would silently lose it.
    """
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r} (use p/q form)")
    if "/" in text:
        num_s, den_s = text.split("/", 1)
        return Fraction(int(num_s), int(den_s))
    return Fraction(int(text))


def format_rational(x: Fraction) -> str:
    """Serialize a scalar as "p" or "p/q"."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def random_rational(rng: random.Random, avoid: Iterable[Fraction] = ()) -> Fraction:
    """Draw a nonzero rational uniformly from the documented range.

    Numerators are drawn from [-99, 99] \\ {0}, denominators from [1, 20].
    Deterministic given the state of ``rng``; never returns 0 or a member
    of ``avoid``.
    """
    avoid_set = set(avoid) | {Fraction(0)}
    # 198 numerators x 20 denominators gives thousands of reduced values,
    # far more than any avoid set used in practice.
    for _ in range(10_000):
        num = rng.randint(NUMERATOR_RANGE[0], NUMERATOR_RANGE[1])
        if num == 0:
            continue
        den = rng.randint(DENOMINATOR_RANGE[0], DENOMINATOR_RANGE[1])
        value = Fraction(num, den)
        if value not in avoid_set:
            return value
    raise ExhaustedRange("avoid set exhausted the sampling range")


def distinct_rationals(
    rng: random.Random, count: int, avoid: Iterable[Fraction] = ()
) -> list[Fraction]:
    """Draw ``count`` pairwise distinct nonzero rationals, none in ``avoid``."""
    out: list[Fraction] = []
    avoid_set = set(avoid)
    for _ in range(count):
        value = random_rational(rng, avoid_set)
        avoid_set.add(value)
        out.append(value)
    return out


def _newton_coefficients(
    xs: Sequence[Fraction], ys: Sequence[Fraction]
) -> list[Fraction]:
    """Divided-difference coefficients of the Newton-form interpolant."""
    coeffs = list(ys)
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    return coeffs


def _eval_newton(
    xs: Sequence[Fraction], coeffs: Sequence[Fraction], x: Fraction
) -> Fraction:
    acc = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        acc = acc * (x - xs[i]) + coeffs[i]
    return acc


def _monomial_coefficients(
    xs: Sequence[Fraction], coeffs: Sequence[Fraction]
) -> list[Fraction]:
    """Monomial coefficients (ascending powers) of the Newton interpolant."""
    mono = [Fraction(0)] * len(coeffs)
    for i in range(len(coeffs) - 1, -1, -1):
        # mono <- mono * (x - xs[i]) + coeffs[i]
        new = [Fraction(0)] * len(coeffs)
        for d in range(len(coeffs) - 1):
            new[d + 1] += mono[d]
            new[d] -= xs[i] * mono[d]
        new[0] += coeffs[i]
        mono = new
    return mono


def interpolate_degree(
    points: Sequence[tuple[Fraction, Fraction]], max_degree: int
) -> int:
    """Exact degree of the polynomial underlying a sample of points.

    Interpolates through the first ``max_degree + 1`` points and asserts the
    remaining points lie on the interpolant; consistency certifies the
    underlying function is a polynomial of degree <= ``max_degree`` on this
    sample.  Returns -1 for the zero polynomial.

    Raises :class:`InconsistentSample` if an extra point is off the curve and
    :class:`ValueError` on malformed samples (too few points, repeated x).
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if len(points) < max_degree + 2:
        raise ValueError(f"need at least {max_degree + 2} points, got {len(points)}")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must have pairwise distinct x")
    ys = [p[1] for p in points]

    head_x, head_y = xs[: max_degree + 1], ys[: max_degree + 1]
    coeffs = _newton_coefficients(head_x, head_y)

    for x, y in zip(xs[max_degree + 1 :], ys[max_degree + 1 :]):
        if _eval_newton(head_x, coeffs, x) != y:
            raise InconsistentSample(
                f"point ({format_rational(x)}, {format_rational(y)}) is off the "
                f"degree-{max_degree} interpolant"
            )

    mono = _monomial_coefficients(head_x, coeffs)
    for d in range(len(mono) - 1, -1, -1):
        if mono[d] != 0:
            return d
    return -1
