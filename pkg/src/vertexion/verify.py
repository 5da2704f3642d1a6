"""Executable verification suites for every analytic property of the model.

Each suite sweeps lattice sizes and random rational parameter points and
checks the corresponding identity exactly (equality of rationals, no
tolerance).  Failures are reported, not raised, so one run documents the
full pass/fail landscape; the service and CLI map any failed report to a
nonzero exit.

Determinism: every (configuration x trial) cell seeds its own RNG from a
string derived from the sweep seed and the cell coordinates, and reports
are sorted before serialization, so output bytes do not depend on worker
count or scheduling.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .lattice import (
    OrdinaryModel,
    SpinConfig,
    TriangularModel,
    ordinary_state_vector,
    ordinary_wavefunction,
    triangular_state_vector,
    wavefunction_triangular,
)
from .scalars import (
    distinct_rationals,
    format_rational,
    interpolate_degree,
    random_rational,
    InconsistentSample,
)
from .symfun import (
    Partition,
    f_triangular,
    grothendieck,
    GrothendieckPoint,
    grothendieck_specialization,
    lambda_to_x,
    of_ordinary,
)
from .weights import (
    KParams,
    LSiteParams,
    RParams,
    check_reflection,
    check_rll,
    check_yang_baxter,
    six_vertex_site,
)

WORKERS_ENV = "VERTEXION_THREADS"


@dataclass
class CheckReport:
    """Outcome of one exact check over some number of trials."""

    check_id: str
    params: str
    passed: bool
    witness: Optional[tuple[str, str]] = None
    trials: int = 1
    # configuration coordinates for the CSV summary; None where not applicable
    N: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    x: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "passed": self.passed,
            "witness": list(self.witness) if self.witness else None,
            "trials": self.trials,
            "N": self.N,
            "n": self.n,
            "m": self.m,
            "x": list(self.x),
        }


@dataclass
class SweepSpec:
    """Size ranges, trial count and seed for a verification sweep."""

    n_range: tuple[int, int] = (1, 4)
    N_range: tuple[int, int] = (1, 4)
    trials: int = 5
    seed: int = 0
    m_policy: str = "all"  # "all" or a fixed m as str(int)

    def __post_init__(self):
        if self.n_range[0] > self.n_range[1] or self.N_range[0] > self.N_range[1]:
            raise ValueError("empty size range")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def Ns(self) -> range:
        return range(self.N_range[0], self.N_range[1] + 1)

    def ms(self, n: int, N: int) -> list[int]:
        if self.m_policy == "all":
            return list(range(0, min(n, N) + 1))
        return [int(self.m_policy)]


def _cell_rng(spec: SweepSpec, *coords) -> random.Random:
    return random.Random(f"{spec.seed}|" + "|".join(str(c) for c in coords))


def _witness(lhs: Fraction, rhs: Fraction) -> tuple[str, str]:
    return (format_rational(lhs), format_rational(rhs))


def _execute(jobs: Sequence[Callable[[], list[CheckReport]]]) -> list[CheckReport]:
    """Run independent cells, possibly on several workers, and sort reports."""
    workers = int(os.environ.get(WORKERS_ENV, "0")) or (os.cpu_count() or 1)
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda j: j(), jobs))
    else:
        chunks = [job() for job in jobs]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.check_id, r.params))
    return reports


# --- random parameter points ------------------------------------------------


def _triangular_point(rng: random.Random, n: int, N: int):
    t = random_rational(rng, avoid={Fraction(1)})
    A = random_rational(rng)
    B = random_rational(rng)
    # u = +-1 kills the (u^2 - 1) factors identically and degenerates the
    # generic w_N-degree, so keep the draws off those points
    u = distinct_rationals(rng, n, avoid={Fraction(1), Fraction(-1)})
    w = distinct_rationals(rng, N, avoid={uj / t for uj in u})
    return t, A, B, tuple(u), tuple(w)


def _triangular_model(t, A, B, u, w) -> TriangularModel:
    return TriangularModel(
        N=len(w), n=len(u), r=RParams(t), k=KParams(A, B), u=tuple(u), w=tuple(w)
    )


def _point_str(**scalars) -> str:
    parts = []
    for name, value in scalars.items():
        if isinstance(value, (list, tuple)):
            parts.append(f"{name}=[" + ",".join(format_rational(v) for v in value) + "]")
        else:
            parts.append(f"{name}={format_rational(value)}")
    return " ".join(parts)


def random_constrained_site(rng: random.Random, t: Fraction) -> LSiteParams:
    """Sample a six-tuple satisfying the defining relations exactly.

    a, b, c, d are free nonzero draws; e and f are solved, not rejection
    sampled (the constraint variety has measure zero).
    """
    return LSiteParams.solve(
        a=random_rational(rng),
        b=random_rational(rng),
        c=random_rational(rng),
        d=random_rational(rng),
        t=t,
    )


def random_unconstrained_site(rng: random.Random) -> LSiteParams:
    """Six free draws; generically violates the relations (negative control)."""
    return LSiteParams(*(random_rational(rng) for _ in range(6)))


def _ordinary_point(rng: random.Random, n: int, N: int, constrain_sites: bool = True):
    t = random_rational(rng, avoid={Fraction(1)})
    sites = tuple(
        random_constrained_site(rng, t) if constrain_sites else random_unconstrained_site(rng)
        for _ in range(N)
    )
    u = distinct_rationals(rng, n)
    # keep w_N away from the recursion point of every u_j
    avoid = {-sites[-1].a * uj / sites[-1].b for uj in u if sites[-1].b != 0}
    w = distinct_rationals(rng, N, avoid=avoid)
    return t, sites, tuple(u), tuple(w)


# --- algebraic prerequisite relations ---------------------------------------


def verify_weight_relations(spec: SweepSpec) -> list[CheckReport]:
    """Bulk, boundary and mixed intertwining relations at random points."""

    def yang_baxter() -> list[CheckReport]:
        for trial in range(spec.trials):
            rng = _cell_rng(spec, "yang-baxter", trial)
            t = random_rational(rng)
            u, v, w = distinct_rationals(rng, 3)
            if not check_yang_baxter(u, v, w, RParams(t)):
                return [
                    CheckReport(
                        "weights.yang-baxter",
                        _point_str(u=u, v=v, w=w, t=t),
                        False,
                        witness=("operator mismatch", "see parameters"),
                        trials=trial + 1,
                    )
                ]
        return [CheckReport("weights.yang-baxter", f"{spec.trials} random points", True, trials=spec.trials)]

    def reflection() -> list[CheckReport]:
        for trial in range(spec.trials):
            rng = _cell_rng(spec, "reflection", trial)
            t, A, B = (random_rational(rng) for _ in range(3))
            u, w = distinct_rationals(rng, 2)
            if not check_reflection(u, w, RParams(t), KParams(A, B)):
                return [
                    CheckReport(
                        "weights.reflection",
                        _point_str(u=u, w=w, t=t, A=A, B=B),
                        False,
                        witness=("operator mismatch", "see parameters"),
                        trials=trial + 1,
                    )
                ]
        return [CheckReport("weights.reflection", f"{spec.trials} random points", True, trials=spec.trials)]

    def rll() -> list[CheckReport]:
        for trial in range(spec.trials):
            rng = _cell_rng(spec, "rll", trial)
            t = random_rational(rng, avoid={Fraction(1)})
            site = random_constrained_site(rng, t)
            u1, u2 = distinct_rationals(rng, 2)
            w = random_rational(rng)
            if not check_rll(u1, u2, w, site, RParams(t)):
                return [
                    CheckReport(
                        "weights.rll",
                        _point_str(u1=u1, u2=u2, w=w, t=t),
                        False,
                        witness=("operator mismatch", "see parameters"),
                        trials=trial + 1,
                    )
                ]
        return [CheckReport("weights.rll", f"{spec.trials} random points", True, trials=spec.trials)]

    return _execute([yang_baxter, reflection, rll])


# --- triangular boundary: characterization properties -----------------------


def _configs(spec: SweepSpec):
    for N in spec.Ns():
        for n in spec.ns():
            for m in spec.ms(n, N):
                for x in itertools.combinations(range(1, N + 1), m):
                    yield N, n, m, x


def verify_triangular_properties(
    spec: SweepSpec, k_upper: Fraction = Fraction(0)
) -> list[CheckReport]:
    """Degree, symmetry, recursion, factorization and initial conditions
    of the triangular-boundary wavefunction, all against the lattice oracle.

    ``k_upper`` corrupts the boundary triangularity (negative control).
    """
    jobs: list[Callable[[], list[CheckReport]]] = []

    def degree_cell(N, n, m, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            expected = n - 1 if (m > 0 and x[-1] == N) else n
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-degree", N, n, x, trial)
                t, A, B, u, w = _triangular_point(rng, n, N)
                wn_samples = distinct_rationals(rng, n + 2)
                points = []
                for wn in wn_samples:
                    model = _triangular_model(t, A, B, u, w[:-1] + (wn,))
                    points.append(
                        (wn, wavefunction_triangular(model, cfg, k_upper=k_upper))
                    )
                try:
                    degree = interpolate_degree(points, n)
                except InconsistentSample as exc:
                    degree = None
                    detail = str(exc)
                if degree != expected:
                    got = detail if degree is None else str(degree)
                    return [
                        CheckReport(
                            "tri.degree",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=(got, str(expected)),
                            trials=trial + 1,
                            N=N, n=n, m=m, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "tri.degree", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=m, x=x,
                )
            ]

        return run

    def symmetry_cell(N, n, m, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-symmetry", N, n, x, trial)
                t, A, B, u, w = _triangular_point(rng, n, N)
                i, j = (rng.sample(range(n), 2) if n > 1 else (0, 0))
                permuted = list(u)
                permuted[i], permuted[j] = permuted[j], permuted[i]
                lhs = wavefunction_triangular(
                    _triangular_model(t, A, B, u, w), cfg, k_upper=k_upper
                )
                rhs = wavefunction_triangular(
                    _triangular_model(t, A, B, tuple(permuted), w), cfg, k_upper=k_upper
                )
                if lhs != rhs:
                    return [
                        CheckReport(
                            "tri.u-symmetry",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=_witness(lhs, rhs),
                            trials=trial + 1,
                            N=N, n=n, m=m, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "tri.u-symmetry", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=m, x=x,
                )
            ]

        return run

    def recursion_cell(N, n, m, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-recursion", N, n, x, trial)
                t, A, B, u, w = _triangular_point(rng, n, N)
                un = u[-1]
                w = w[:-1] + (un / t,)
                lhs = wavefunction_triangular(
                    _triangular_model(t, A, B, u, w), cfg, k_upper=k_upper
                )
                prefactor = (1 - t) * (un * un - 1)
                for uj in u[:-1]:
                    prefactor *= (t * uj - un) * (uj * un - 1)
                for wk in w[:-1]:
                    prefactor *= un - wk
                sub = wavefunction_triangular(
                    _triangular_model(t, A, B, u[:-1], w[:-1]),
                    SpinConfig(N - 1, x[:-1]),
                    k_upper=k_upper,
                )
                rhs = prefactor * sub
                if lhs != rhs:
                    return [
                        CheckReport(
                            "tri.recursion",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=_witness(lhs, rhs),
                            trials=trial + 1,
                            N=N, n=n, m=m, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "tri.recursion", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=m, x=x,
                )
            ]

        return run

    def factorization_cell(N, n, m, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-factorization", N, n, x, trial)
                t, A, B, u, w = _triangular_point(rng, n, N)
                lhs = wavefunction_triangular(
                    _triangular_model(t, A, B, u, w), cfg, k_upper=k_upper
                )
                factor = Fraction(1)
                for uj in u:
                    factor *= uj - t * w[-1]
                sub = wavefunction_triangular(
                    _triangular_model(t, A, B, u, w[:-1]),
                    SpinConfig(N - 1, x),
                    k_upper=k_upper,
                )
                rhs = factor * sub
                if lhs != rhs:
                    return [
                        CheckReport(
                            "tri.factorization",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=_witness(lhs, rhs),
                            trials=trial + 1,
                            N=N, n=n, m=m, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "tri.factorization", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=m, x=x,
                )
            ]

        return run

    def initial_m1_cell(n) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(1, (1,))
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-initial-m1", n, trial)
                t, A, B, u, _ = _triangular_point(rng, n, 1)
                un = u[-1]
                w = (un / t,)
                lhs = wavefunction_triangular(
                    _triangular_model(t, A, B, u, w), cfg, k_upper=k_upper
                )
                rhs = (1 - t) * (un * un - 1)
                for uj in u[:-1]:
                    rhs *= (t * uj - un) * (B * uj - A) * (uj * un - 1)
                for j in range(n - 1):
                    for k in range(j + 1, n - 1):
                        rhs *= u[j] * u[k] - t
                if lhs != rhs:
                    return [
                        CheckReport(
                            "tri.initial-m1",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=_witness(lhs, rhs),
                            trials=trial + 1,
                            N=1, n=n, m=1, x=(1,),
                        )
                    ]
            return [
                CheckReport(
                    "tri.initial-m1", "random sweep", True, trials=spec.trials,
                    N=1, n=n, m=1, x=(1,),
                )
            ]

        return run

    def initial_m0_cell(n) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(1, ())
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-initial-m0", n, trial)
                t, A, B, u, w = _triangular_point(rng, n, 1)
                lhs = wavefunction_triangular(
                    _triangular_model(t, A, B, u, w), cfg, k_upper=k_upper
                )
                rhs = Fraction(1)
                for uj in u:
                    rhs *= (B * uj - A) * (uj - t * w[0])
                for j in range(n):
                    for k in range(j + 1, n):
                        rhs *= u[j] * u[k] - t
                if lhs != rhs:
                    return [
                        CheckReport(
                            "tri.initial-m0",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=_witness(lhs, rhs),
                            trials=trial + 1,
                            N=1, n=n, m=0,
                        )
                    ]
            return [
                CheckReport(
                    "tri.initial-m0", "random sweep", True, trials=spec.trials,
                    N=1, n=n, m=0,
                )
            ]

        return run

    for N, n, m, x in _configs(spec):
        jobs.append(degree_cell(N, n, m, x))
        jobs.append(symmetry_cell(N, n, m, x))
        if m >= 1 and x[-1] == N and N >= 2:
            jobs.append(recursion_cell(N, n, m, x))
        if N >= 2 and (m == 0 or x[-1] != N):
            jobs.append(factorization_cell(N, n, m, x))
    for n in spec.ns():
        jobs.append(initial_m1_cell(n))
        jobs.append(initial_m0_cell(n))
    return _execute(jobs)


def verify_triangular_closed_form(
    spec: SweepSpec, include_prefactor: bool = True
) -> list[CheckReport]:
    """Oracle vs closed form for the triangular wavefunction, all configs.

    ``include_prefactor=False`` drops the 1/(n-m)! division in the closed
    form (negative control: fails for every n > m).
    """

    def cell(N, n) -> Callable:
        def run() -> list[CheckReport]:
            reports = []
            failures: dict[tuple, CheckReport] = {}
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "tri-closed-form", N, n, trial)
                t, A, B, u, w = _triangular_point(rng, n, N)
                psi = triangular_state_vector(_triangular_model(t, A, B, u, w))
                for m in spec.ms(n, N):
                    if m > n:
                        continue
                    for x in itertools.combinations(range(1, N + 1), m):
                        cfg = SpinConfig(N, x)
                        lhs = psi.amplitudes[cfg.basis_index()]
                        rhs = f_triangular(
                            t, A, B, u, w, cfg, include_prefactor=include_prefactor
                        )
                        key = (m, x)
                        if lhs != rhs and key not in failures:
                            failures[key] = CheckReport(
                                "tri.closed-form",
                                _point_str(t=t, A=A, B=B, u=u, w=w),
                                False,
                                witness=_witness(lhs, rhs),
                                trials=trial + 1,
                                N=N, n=n, m=m, x=x,
                            )
            for m in spec.ms(n, N):
                if m > n:
                    continue
                for x in itertools.combinations(range(1, N + 1), m):
                    reports.append(
                        failures.get(
                            (m, x),
                            CheckReport(
                                "tri.closed-form", "random sweep", True,
                                trials=spec.trials, N=N, n=n, m=m, x=x,
                            ),
                        )
                    )
            return reports

        return run

    jobs = [cell(N, n) for N in spec.Ns() for n in spec.ns()]
    return _execute(jobs)


def verify_domain_wall_special_case(spec: SweepSpec) -> list[CheckReport]:
    """x = (1..m), N = m reproduces the domain wall partition function."""
    from .lattice import domain_wall_partition_function

    def cell(m, n) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(m, tuple(range(1, m + 1)))
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "domain-wall", m, n, trial)
                t, A, B, u, w = _triangular_point(rng, n, m)
                model = _triangular_model(t, A, B, u, w)
                lhs = domain_wall_partition_function(model)
                rhs = wavefunction_triangular(model, cfg)
                if lhs != rhs:
                    return [
                        CheckReport(
                            "tri.domain-wall",
                            _point_str(t=t, A=A, B=B, u=u, w=w),
                            False,
                            witness=_witness(lhs, rhs),
                            trials=trial + 1,
                            N=m, n=n, m=m, x=cfg.positions,
                        )
                    ]
            return [
                CheckReport(
                    "tri.domain-wall", "random sweep", True, trials=spec.trials,
                    N=m, n=n, m=m, x=cfg.positions,
                )
            ]

        return run

    jobs = [
        cell(m, n)
        for m in spec.Ns()
        for n in spec.ns()
        if n >= m
    ]
    return _execute(jobs)


# --- ordinary wavefunctions -------------------------------------------------


def _ordinary_configs(spec: SweepSpec):
    for N in spec.Ns():
        for n in spec.ns():
            if n > N:
                continue
            for x in itertools.combinations(range(1, N + 1), n):
                yield N, n, x


def verify_ordinary_properties(
    spec: SweepSpec, constrain_sites: bool = True
) -> list[CheckReport]:
    """Degree, symmetry, recursion, factorization and the 1x1 value for the
    ordinary wavefunction, with a per-point intertwining gate on the sites.

    With ``constrain_sites=False`` the sites are sampled freely; the gate
    fails first and the suite reports that failure (negative control).
    """

    def gate() -> list[CheckReport]:
        for trial in range(spec.trials):
            rng = _cell_rng(spec, "ord-gate", trial)
            t = random_rational(rng, avoid={Fraction(1)})
            site = (
                random_constrained_site(rng, t)
                if constrain_sites
                else random_unconstrained_site(rng)
            )
            u1, u2 = distinct_rationals(rng, 2)
            w = random_rational(rng)
            if not check_rll(u1, u2, w, site, RParams(t)):
                return [
                    CheckReport(
                        "ord.rll-gate",
                        _point_str(u1=u1, u2=u2, w=w, t=t),
                        False,
                        witness=(
                            "intertwining relation violated by site "
                            f"({', '.join(format_rational(v) for v in (site.a, site.b, site.c, site.d, site.e, site.f))})",
                            "constraint-satisfying six-tuple expected",
                        ),
                        trials=trial + 1,
                    )
                ]
        return [CheckReport("ord.rll-gate", f"{spec.trials} random points", True, trials=spec.trials)]

    gate_reports = gate()
    if not gate_reports[0].passed:
        return gate_reports

    jobs: list[Callable[[], list[CheckReport]]] = []

    def degree_cell(N, n, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            expected = n - 1 if x[-1] == N else n
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "ord-degree", N, n, x, trial)
                t, sites, u, w = _ordinary_point(rng, n, N)
                wn_samples = distinct_rationals(rng, n + 2)
                points = []
                for wn in wn_samples:
                    model = OrdinaryModel(N, n, RParams(t), sites, u, w[:-1] + (wn,))
                    points.append((wn, ordinary_wavefunction(model, cfg)))
                try:
                    degree = interpolate_degree(points, n)
                except InconsistentSample as exc:
                    degree = None
                    detail = str(exc)
                if degree != expected:
                    got = detail if degree is None else str(degree)
                    return [
                        CheckReport(
                            "ord.degree", _point_str(t=t, u=u, w=w), False,
                            witness=(got, str(expected)), trials=trial + 1,
                            N=N, n=n, m=n, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "ord.degree", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=n, x=x,
                )
            ]

        return run

    def symmetry_cell(N, n, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "ord-symmetry", N, n, x, trial)
                t, sites, u, w = _ordinary_point(rng, n, N)
                lhs = ordinary_wavefunction(
                    OrdinaryModel(N, n, RParams(t), sites, u, w), cfg
                )
                rhs = ordinary_wavefunction(
                    OrdinaryModel(N, n, RParams(t), sites, tuple(reversed(u)), w), cfg
                )
                if lhs != rhs:
                    return [
                        CheckReport(
                            "ord.u-symmetry", _point_str(t=t, u=u, w=w), False,
                            witness=_witness(lhs, rhs), trials=trial + 1,
                            N=N, n=n, m=n, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "ord.u-symmetry", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=n, x=x,
                )
            ]

        return run

    def recursion_cell(N, n, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "ord-recursion", N, n, x, trial)
                t, sites, u, w = _ordinary_point(rng, n, N)
                un = u[-1]
                sN = sites[-1]
                w = w[:-1] + (-sN.a * un / sN.b,)
                lhs = ordinary_wavefunction(
                    OrdinaryModel(N, n, RParams(t), sites, u, w), cfg
                )
                prefactor = (1 - t) * sN.c * un
                for uj in u[:-1]:
                    prefactor *= sN.a * (t * uj - un)
                for sj, wj in zip(sites[:-1], w[:-1]):
                    prefactor *= sj.e * un + sj.f * wj
                sub = ordinary_wavefunction(
                    OrdinaryModel(N - 1, n - 1, RParams(t), sites[:-1], u[:-1], w[:-1]),
                    SpinConfig(N - 1, x[:-1]),
                )
                rhs = prefactor * sub
                if lhs != rhs:
                    return [
                        CheckReport(
                            "ord.recursion", _point_str(t=t, u=u, w=w), False,
                            witness=_witness(lhs, rhs), trials=trial + 1,
                            N=N, n=n, m=n, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "ord.recursion", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=n, x=x,
                )
            ]

        return run

    def factorization_cell(N, n, x) -> Callable:
        def run() -> list[CheckReport]:
            cfg = SpinConfig(N, x)
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "ord-factorization", N, n, x, trial)
                t, sites, u, w = _ordinary_point(rng, n, N)
                lhs = ordinary_wavefunction(
                    OrdinaryModel(N, n, RParams(t), sites, u, w), cfg
                )
                factor = Fraction(1)
                for uj in u:
                    factor *= sites[-1].a * uj + sites[-1].b * w[-1]
                sub = ordinary_wavefunction(
                    OrdinaryModel(N - 1, n, RParams(t), sites[:-1], u, w[:-1]),
                    SpinConfig(N - 1, x),
                )
                rhs = factor * sub
                if lhs != rhs:
                    return [
                        CheckReport(
                            "ord.factorization", _point_str(t=t, u=u, w=w), False,
                            witness=_witness(lhs, rhs), trials=trial + 1,
                            N=N, n=n, m=n, x=x,
                        )
                    ]
            return [
                CheckReport(
                    "ord.factorization", "random sweep", True, trials=spec.trials,
                    N=N, n=n, m=n, x=x,
                )
            ]

        return run

    def initial_cell() -> list[CheckReport]:
        cfg = SpinConfig(1, (1,))
        for trial in range(spec.trials):
            rng = _cell_rng(spec, "ord-initial", trial)
            t, sites, u, w = _ordinary_point(rng, 1, 1)
            lhs = ordinary_wavefunction(OrdinaryModel(1, 1, RParams(t), sites, u, w), cfg)
            rhs = (1 - t) * sites[0].c * u[0]
            if lhs != rhs:
                return [
                    CheckReport(
                        "ord.initial-1x1", _point_str(t=t, u=u, w=w), False,
                        witness=_witness(lhs, rhs), trials=trial + 1,
                        N=1, n=1, m=1, x=(1,),
                    )
                ]
        return [
            CheckReport(
                "ord.initial-1x1", "random sweep", True, trials=spec.trials,
                N=1, n=1, m=1, x=(1,),
            )
        ]

    for N, n, x in _ordinary_configs(spec):
        jobs.append(degree_cell(N, n, x))
        jobs.append(symmetry_cell(N, n, x))
        if x[-1] == N and N >= 2:
            jobs.append(recursion_cell(N, n, x))
        if x[-1] != N and N >= 2:
            jobs.append(factorization_cell(N, n, x))
    jobs.append(initial_cell)
    return gate_reports + _execute(jobs)


def verify_ordinary_closed_form(spec: SweepSpec) -> list[CheckReport]:
    """Oracle vs closed form for the ordinary wavefunction.

    Also checks creation-operator commutativity (u reversal) on the full
    state vector and the six-vertex specialization of the sites.
    """

    def cell(N, n) -> Callable:
        def run() -> list[CheckReport]:
            reports = []
            failures: dict[tuple, CheckReport] = {}
            commute_fail = None
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "ord-closed-form", N, n, trial)
                t, sites, u, w = _ordinary_point(rng, n, N)
                model = OrdinaryModel(N, n, RParams(t), sites, u, w)
                psi = ordinary_state_vector(model)
                reversed_model = OrdinaryModel(
                    N, n, RParams(t), sites, tuple(reversed(u)), w
                )
                psi_rev = ordinary_state_vector(reversed_model)
                if psi.amplitudes != psi_rev.amplitudes and commute_fail is None:
                    commute_fail = CheckReport(
                        "ord.b-commutativity", _point_str(t=t, u=u, w=w), False,
                        witness=("state vectors differ", "u reversal"),
                        trials=trial + 1, N=N, n=n,
                    )
                for x in itertools.combinations(range(1, N + 1), n):
                    cfg = SpinConfig(N, x)
                    lhs = psi.amplitudes[cfg.basis_index()]
                    rhs = of_ordinary(t, sites, u, w, cfg)
                    if lhs != rhs and x not in failures:
                        failures[x] = CheckReport(
                            "ord.closed-form", _point_str(t=t, u=u, w=w), False,
                            witness=_witness(lhs, rhs), trials=trial + 1,
                            N=N, n=n, m=n, x=x,
                        )
            for x in itertools.combinations(range(1, N + 1), n):
                reports.append(
                    failures.get(
                        x,
                        CheckReport(
                            "ord.closed-form", "random sweep", True,
                            trials=spec.trials, N=N, n=n, m=n, x=x,
                        ),
                    )
                )
            reports.append(
                commute_fail
                or CheckReport(
                    "ord.b-commutativity", "random sweep", True,
                    trials=spec.trials, N=N, n=n,
                )
            )
            return reports

        return run

    def six_vertex_cell() -> list[CheckReport]:
        # the site specialization reducing L to R must also satisfy the theorem
        for trial in range(spec.trials):
            rng = _cell_rng(spec, "ord-six-vertex", trial)
            N, n = 3, 2
            t = random_rational(rng, avoid={Fraction(1)})
            sites = tuple(six_vertex_site(t) for _ in range(N))
            u = tuple(distinct_rationals(rng, n))
            w = tuple(distinct_rationals(rng, N))
            model = OrdinaryModel(N, n, RParams(t), sites, u, w)
            for x in itertools.combinations(range(1, N + 1), n):
                cfg = SpinConfig(N, x)
                lhs = ordinary_wavefunction(model, cfg)
                rhs = of_ordinary(t, sites, u, w, cfg)
                if lhs != rhs:
                    return [
                        CheckReport(
                            "ord.six-vertex-specialization",
                            _point_str(t=t, u=u, w=w), False,
                            witness=_witness(lhs, rhs), trials=trial + 1,
                            N=N, n=n, m=n, x=x,
                        )
                    ]
        return [
            CheckReport(
                "ord.six-vertex-specialization", "random sweep", True,
                trials=spec.trials,
            )
        ]

    jobs = [cell(N, n) for N in spec.Ns() for n in spec.ns() if n <= N]
    jobs.append(six_vertex_cell)
    return _execute(jobs)


def verify_grothendieck_correspondence(
    spec: SweepSpec, beta: Optional[Fraction] = None
) -> list[CheckReport]:
    """At t = 0 the homogeneous specialization of the ordinary closed form
    equals the beta-deformed Schur determinant up to the documented
    prefactor and variable map, for every partition in the frame.
    """

    def cell(n, N) -> Callable:
        def run() -> list[CheckReport]:
            reports = []
            failures: dict[tuple, CheckReport] = {}
            partitions = [
                Partition(parts, N)
                for parts in _partitions_in_frame(N - n, n)
            ]
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "grothendieck", n, N, trial)
                b = beta if beta is not None else random_rational(rng)
                u = tuple(distinct_rationals(rng, n, avoid={-1 / b}))
                sites, w, z, prefactor = grothendieck_specialization(
                    n, N, b, u, t=Fraction(0)
                )
                point = GrothendieckPoint(tuple(z), b)
                for lam in partitions:
                    cfg = lambda_to_x(lam)
                    lhs = of_ordinary(Fraction(0), sites, u, w, cfg)
                    rhs = prefactor * grothendieck(lam, point)
                    if lhs != rhs and lam.parts not in failures:
                        failures[lam.parts] = CheckReport(
                            "groth.correspondence",
                            _point_str(beta=b, u=u), False,
                            witness=_witness(lhs, rhs), trials=trial + 1,
                            N=N, n=n, m=n, x=cfg.positions,
                        )
            for lam in partitions:
                cfg = lambda_to_x(lam)
                reports.append(
                    failures.get(
                        lam.parts,
                        CheckReport(
                            "groth.correspondence",
                            f"lambda={list(lam.parts)}", True,
                            trials=spec.trials, N=N, n=n, m=n, x=cfg.positions,
                        ),
                    )
                )
            return reports

        return run

    jobs = [
        cell(n, N)
        for n in spec.ns()
        for N in spec.Ns()
        if n <= N
    ]
    return _execute(jobs)


def _partitions_in_frame(width: int, rows: int):
    """All weakly decreasing tuples of length ``rows`` with parts in 0..width."""
    if rows == 0:
        yield ()
        return
    for first in range(width, -1, -1):
        for rest in _partitions_in_frame(first, rows - 1):
            yield (first,) + rest


def verify_proof_identities(spec: SweepSpec) -> list[CheckReport]:
    """Permutation-independence of the pull-out factors used in the
    recursion proofs, as standalone exact identities at random points."""

    def run() -> list[CheckReport]:
        reports = []
        for name in ("tri-pullout-recursion", "tri-pullout-factorization",
                     "ord-pullout-recursion", "ord-pullout-factorization"):
            failed = None
            for trial in range(spec.trials):
                rng = _cell_rng(spec, "proof-identity", name, trial)
                n = rng.randint(2, 5)
                m = rng.randint(1, n)
                t = random_rational(rng)
                u = distinct_rationals(rng, n)
                sigma = list(range(n))
                rng.shuffle(sigma)
                if name == "tri-pullout-recursion":
                    # product over the sigma'-image of {1..n-1} is permutation free
                    un = u[-1]
                    perm = [i for i in sigma if i != n - 1]
                    lhs = Fraction(1)
                    for i in perm:
                        lhs *= (t * u[i] - un) * (u[i] * un - 1)
                    rhs = Fraction(1)
                    for uj in u[:-1]:
                        rhs *= (t * uj - un) * (uj * un - 1)
                elif name == "tri-pullout-factorization":
                    wN = random_rational(rng)
                    lhs = Fraction(1)
                    for i in sigma:
                        lhs *= u[i] - t * wN
                    rhs = Fraction(1)
                    for uj in u:
                        rhs *= uj - t * wN
                elif name == "ord-pullout-recursion":
                    un = u[-1]
                    aN = random_rational(rng)
                    perm = [i for i in sigma if i != n - 1]
                    lhs = Fraction(1)
                    for i in perm:
                        lhs *= (t * u[i] - un) / (u[i] - un) * aN * (u[i] - un)
                    rhs = Fraction(1)
                    for uj in u[:-1]:
                        rhs *= aN * (t * uj - un)
                else:
                    aN = random_rational(rng)
                    bN = random_rational(rng)
                    wN = random_rational(rng)
                    lhs = Fraction(1)
                    for i in sigma:
                        lhs *= aN * u[i] + bN * wN
                    rhs = Fraction(1)
                    for uj in u:
                        rhs *= aN * uj + bN * wN
                if lhs != rhs:
                    failed = CheckReport(
                        f"proof.{name}", _point_str(t=t, u=u), False,
                        witness=_witness(lhs, rhs), trials=trial + 1,
                    )
                    break
            reports.append(
                failed
                or CheckReport(
                    f"proof.{name}", "random sweep", True, trials=spec.trials
                )
            )
        return reports

    return _execute([run])


# --- default suite and serialization ----------------------------------------

DEFAULT_SUITES = (
    "weights",
    "triangular-properties",
    "triangular-closed-form",
    "domain-wall",
    "ordinary-properties",
    "ordinary-closed-form",
    "grothendieck",
    "proof-identities",
)


def run_suites(
    spec: SweepSpec, suites: Sequence[str] = DEFAULT_SUITES
) -> list[CheckReport]:
    """Run the named suites with sizes adapted per suite.

    The default sizes reproduce the full verification sweep: triangular
    checks at n, N up to 4; ordinary checks at n up to 3, N up to 5;
    the determinant correspondence at n up to 3, N up to 5.
    """
    reports: list[CheckReport] = []
    ord_spec = SweepSpec(
        n_range=(spec.n_range[0], min(spec.n_range[1], 3)),
        N_range=(spec.N_range[0], spec.N_range[1] + 1),
        trials=spec.trials,
        seed=spec.seed,
    )
    for suite in suites:
        if suite == "weights":
            relation_spec = SweepSpec(
                n_range=spec.n_range, N_range=spec.N_range,
                trials=max(spec.trials, 100), seed=spec.seed,
            )
            reports += verify_weight_relations(relation_spec)
        elif suite == "triangular-properties":
            reports += verify_triangular_properties(spec)
        elif suite == "triangular-closed-form":
            reports += verify_triangular_closed_form(spec)
        elif suite == "domain-wall":
            reports += verify_domain_wall_special_case(spec)
        elif suite == "ordinary-properties":
            reports += verify_ordinary_properties(ord_spec)
        elif suite == "ordinary-closed-form":
            reports += verify_ordinary_closed_form(ord_spec)
        elif suite == "grothendieck":
            groth_spec = SweepSpec(
                n_range=ord_spec.n_range, N_range=ord_spec.N_range,
                trials=min(spec.trials, 3), seed=spec.seed,
            )
            reports += verify_grothendieck_correspondence(groth_spec)
        elif suite == "proof-identities":
            reports += verify_proof_identities(spec)
        else:
            raise ValueError(f"unknown suite: {suite}")
    reports.sort(key=lambda r: (r.check_id, str(r.N), str(r.n), str(r.m), r.x, r.params))
    return reports


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def reports_to_csv(reports: Sequence[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_id", "N", "n", "m", "x", "trials", "passed"])
    for r in reports:
        writer.writerow(
            [
                r.check_id,
                "" if r.N is None else r.N,
                "" if r.n is None else r.n,
                "" if r.m is None else r.m,
                "-".join(str(p) for p in r.x),
                r.trials,
                r.passed,
            ]
        )
    return buf.getvalue()


def all_passed(reports: Sequence[CheckReport]) -> bool:
    return all(r.passed for r in reports)
