"""Pydantic request/response models for the evaluation service.

Scalars travel as "p/q" strings end to end; floats and decimal notation
are rejected so that exactness survives the wire.  All models forbid
unknown fields (strict schema).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field

from ..scalars import format_rational, parse_rational


def _to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"scalars must be 'p/q' strings, got {value!r}")


Scalar = Annotated[Fraction, BeforeValidator(_to_rational)]


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


class SiteWeights(StrictModel):
    """One per-site six-tuple (a, b, c, d, e, f)."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    e: Scalar
    f: Scalar


class TriangularEvalRequest(StrictModel):
    t: Scalar
    A: Scalar
    B: Scalar
    u: list[Scalar] = Field(min_length=0)
    w: list[Scalar] = Field(min_length=1)
    x: list[int]


class OrdinaryEvalRequest(StrictModel):
    t: Scalar
    sites: list[SiteWeights] = Field(min_length=1)
    u: list[Scalar]
    w: list[Scalar] = Field(min_length=1)
    x: list[int]


class GrothendieckEvalRequest(StrictModel):
    lam: list[int]
    N: int
    z: list[Scalar]
    beta: Scalar


class EvalResponse(StrictModel):
    value: str


class PairedEvalResponse(StrictModel):
    """Oracle and closed-form values side by side; equal for valid inputs."""

    oracle: str
    formula: str
    equal: bool


class VerifyRequest(StrictModel):
    seed: int = 0
    trials: int = Field(default=5, ge=1)
    max_n: int = Field(default=4, ge=1)
    max_N: int = Field(default=4, ge=1)
    suites: Optional[list[str]] = None


class CheckReportModel(StrictModel):
    check_id: str
    params: str
    passed: bool
    witness: Optional[list[str]] = None
    trials: int
    N: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    x: list[int] = []


class VerifyResponse(StrictModel):
    passed: bool
    reports: list[CheckReportModel]
    csv_summary: str


def scalar_str(x: Fraction) -> str:
    return format_rational(x)
