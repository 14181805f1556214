"""Deterministic parameter sweep that cross-checks every route at every point.

A sweep point is (N, m, a, lambda) with nu := lambda + a.  At each point the
harness compares the existence predicate against the exact nullspace
dimension, and at one-dimensional points it additionally checks that the
closed-form generator spans the nullspace, is annihilated by all equations,
and that both operator emission routes agree up to a nonzero scalar (the
operator checks are bounded to N <= operator_max_n to keep desk runs fast).
Negative m is certified through the duality: the mirrored point reuses the
positive solve, applies the involution at the symbol level, and compares
against the literal negative-orientation formulas.

Workers may evaluate points concurrently, but certificates are emitted in
ascending (N, m, a, lambda) order regardless of scheduling, so output files
are byte-identical across parallelism degrees.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import closedform, fsystem, operator

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepConfig:
    """Grid description; the defaults reproduce the desk-scale certification."""

    n_values: tuple[int, ...] = (0, 1, 2, 3)
    m_offsets: tuple[int, ...] = (1, 2, 3, 4)
    a_extra: int = 4
    lambda_pad_low: int = 3
    lambda_pad_high: int = 2
    extra_lambdas: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(-7, 3))
    include_negative_m: bool = True
    operator_max_n: int = 2
    jobs: int = 1

    def to_json(self) -> dict:
        # jobs is a scheduling knob, not part of the grid; leaving it out
        # keeps output files byte-identical across parallelism degrees
        return {
            "n_values": list(self.n_values),
            "m_offsets": list(self.m_offsets),
            "a_extra": self.a_extra,
            "lambda_pad_low": self.lambda_pad_low,
            "lambda_pad_high": self.lambda_pad_high,
            "extra_lambdas": [str(x) for x in self.extra_lambdas],
            "include_negative_m": self.include_negative_m,
            "operator_max_n": self.operator_max_n,
        }


@dataclass(frozen=True)
class SweepTask:
    N: int
    m: int  # positive orientation
    a: int
    lam: Fraction
    include_negative: bool
    operator_max_n: int


@dataclass
class Certificate:
    """All cross-check outcomes at a single parameter point."""

    params: fsystem.SystemParams
    classification: closedform.Classification
    xi_dimension: int
    dimension_match: bool
    generator_proportionality: object = None  # GaussianRational | None
    annihilated: bool | None = None
    even_space_ok: bool | None = None
    operator_scalar: object = None  # GaussianRational | None
    operator_order_ok: bool | None = None
    duality_involution_ok: bool | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def sort_key(self):
        p = self.params
        return (p.N, p.m, p.nu - p.lam, p.lam)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "classification": self.classification.to_json(),
            "xi_dimension": self.xi_dimension,
            "dimension_match": self.dimension_match,
            "generator_proportionality": (
                None if self.generator_proportionality is None else self.generator_proportionality.to_json()
            ),
            "annihilated": self.annihilated,
            "even_space_ok": self.even_space_ok,
            "operator_scalar": (
                None if self.operator_scalar is None else self.operator_scalar.to_json()
            ),
            "operator_order_ok": self.operator_order_ok,
            "duality_involution_ok": self.duality_involution_ok,
            "failures": list(self.failures),
            "pass": self.passed,
        }


def build_tasks(config: SweepConfig) -> list[SweepTask]:
    tasks = []
    for n_val in sorted(config.n_values):
        for offset in sorted(config.m_offsets):
            m = n_val + offset
            if m <= n_val:
                log.warning("skipping m=%d at N=%d: outside the |m| > N regime", m, n_val)
                continue
            for a in range(m - n_val, m + n_val + config.a_extra + 1):
                lows = 1 - n_val - a - config.lambda_pad_low
                highs = n_val + 1 - a + config.lambda_pad_high
                lams = [Fraction(v) for v in range(lows, highs + 1)]
                lams += list(config.extra_lambdas)
                for lam in lams:
                    tasks.append(
                        SweepTask(n_val, m, a, lam, config.include_negative_m, config.operator_max_n)
                    )
    return tasks


def _check_annihilated(params: fsystem.SystemParams, sol: fsystem.SolutionVector) -> bool:
    return all(
        fsystem.apply_L(kind, sign, j, params, sol).is_zero()
        for kind, sign, j in fsystem.equation_index(params.N)
    )


def evaluate_task(task: SweepTask) -> list[Certificate]:
    """Certify the positive point and, when asked, its mirror image."""
    params = fsystem.SystemParams(task.lam, task.lam + task.a, task.N, task.m)
    outcome = closedform.classify(params.lam, params.nu, params.N, params.m)
    result = fsystem.solve_xi(params)
    cert = Certificate(
        params=params,
        classification=outcome,
        xi_dimension=result.dimension,
        dimension_match=result.dimension == outcome.dimension,
    )
    if not cert.dimension_match:
        cert.failures.append("nullspace dimension disagrees with the predicate")
    out = [cert]

    psi = None
    if result.dimension == 1 and outcome.dimension == 1:
        try:
            closed = closedform.closed_solution(params)
            cert.even_space_ok = True
        except ValueError:
            cert.even_space_ok = False
            cert.failures.append("closed form violates its parity spaces")
            closed = None
        if closed is not None:
            scalar = fsystem.proportionality(result.generator, closed)
            cert.generator_proportionality = scalar
            if scalar is None or not scalar:
                cert.failures.append("closed form is not a nonzero multiple of the nullspace generator")
            cert.annihilated = _check_annihilated(params, closed)
            if not cert.annihilated:
                cert.failures.append("closed form is not annihilated by all equations")
        psi = operator.symbol_psi(params, result.generator)
        if task.N <= task.operator_max_n:
            paper = operator.emit_operator(params, "paper")
            canonical = operator.symbol_to_operator(psi)
            scalar = operator.compare_up_to_scalar(paper, canonical)
            cert.operator_scalar = scalar
            if scalar is None or not scalar:
                cert.failures.append("operator routes are not proportional by a nonzero scalar")
            cert.operator_order_ok = paper.orders() == {task.a}
            if not cert.operator_order_ok:
                cert.failures.append("paper-form term order differs from nu - lambda")

    if task.include_negative:
        mirrored = params.mirrored()
        neg_outcome = closedform.classify(mirrored.lam, mirrored.nu, mirrored.N, mirrored.m)
        neg = Certificate(
            params=mirrored,
            classification=neg_outcome,
            xi_dimension=result.dimension,
            dimension_match=result.dimension == neg_outcome.dimension,
        )
        if not neg.dimension_match:
            neg.failures.append("mirrored dimension disagrees with the predicate")
        if psi is not None:
            flipped = closedform.dual_solution(psi, params)
            neg.duality_involution_ok = closedform.dual_solution(flipped, params) == psi
            if not neg.duality_involution_ok:
                neg.failures.append("duality fails to be an involution on the generator symbol")
            if task.N <= task.operator_max_n:
                paper = operator.emit_operator(mirrored, "paper")
                canonical = operator.symbol_to_operator(flipped)
                scalar = operator.compare_up_to_scalar(paper, canonical)
                neg.operator_scalar = scalar
                if scalar is None or not scalar:
                    neg.failures.append("mirrored operator routes are not proportional")
                neg.operator_order_ok = paper.orders() == {task.a}
                if not neg.operator_order_ok:
                    neg.failures.append("mirrored paper-form term order differs from nu - lambda")
        out.append(neg)
    return out


def run_sweep(config: SweepConfig) -> tuple[list[Certificate], dict]:
    """Evaluate the whole grid and return certificates plus a summary."""
    tasks = build_tasks(config)
    certificates: list[Certificate] = []
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for batch in pool.map(evaluate_task, tasks, chunksize=8):
                certificates.extend(batch)
    else:
        for task in tasks:
            certificates.extend(evaluate_task(task))
    certificates.sort(key=Certificate.sort_key)
    summary = {
        "checked": len(certificates),
        "dim0": sum(1 for c in certificates if c.xi_dimension == 0),
        "dim1": sum(1 for c in certificates if c.xi_dimension == 1),
        "failures": sum(1 for c in certificates if not c.passed),
    }
    return certificates, summary


def sweep_document(config: SweepConfig) -> dict:
    certificates, summary = run_sweep(config)
    return {
        "config": config.to_json(),
        "certificates": [c.to_json() for c in certificates],
        "summary": summary,
    }
