"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
complete.  Criteria 1-3 and 7 share one full desk-scale sweep (N <= 3,
m up to N+4 and mirrored, a up to m+N+4, integer lambda over the padded
window plus the rationals 1/2 and -7/3); every check is exact, with zero
tolerance everywhere.
"""

import time
from fractions import Fraction as F

import pytest

from breakops.cli import main
from breakops.fsystem import SystemParams
from breakops.operator import emit_operator
from breakops.sweep import SweepConfig, run_sweep
from breakops.verify import (
    default_mu_values,
    gegenbauer_suite,
    hypergeom_suite,
    legacy_order_one_operator,
)
from breakops.closedform import consistency_polynomials


def _report(number: int, title: str, ok: bool, detail: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number}] {title}: {status}{suffix}")
    return ok


@pytest.fixture(scope="module")
def desk_sweep():
    started = time.monotonic()
    certificates, summary = run_sweep(SweepConfig())
    elapsed = time.monotonic() - started
    return certificates, summary, elapsed


def test_criterion_1_classification(desk_sweep):
    certificates, summary, elapsed = desk_sweep
    mismatches = [c for c in certificates if not c.dimension_match]
    ok = not mismatches and summary["checked"] > 2000 and elapsed < 180.0
    assert _report(
        1,
        "classification reproduction over the desk sweep",
        ok,
        f"{summary['checked']} points, {summary['dim1']} one-dimensional, {elapsed:.1f}s",
    )


def test_criterion_2_generator_agreement(desk_sweep):
    certificates, _, _ = desk_sweep
    checked = 0
    bad = []
    for cert in certificates:
        if cert.generator_proportionality is None and cert.annihilated is None:
            continue
        checked += 1
        if (
            cert.generator_proportionality is None
            or not cert.generator_proportionality
            or cert.annihilated is not True
            or cert.even_space_ok is not True
        ):
            bad.append(cert)
    ok = checked > 300 and not bad
    assert _report(2, "closed form spans the nullspace and solves all equations", ok, f"{checked} points")


def test_criterion_3_operator_routes(desk_sweep):
    certificates, _, _ = desk_sweep
    checked = 0
    bad = []
    for cert in certificates:
        if cert.operator_scalar is None and cert.operator_order_ok is None:
            continue
        checked += 1
        if not cert.operator_scalar or cert.operator_order_ok is not True:
            bad.append(cert)
    ok = checked > 400 and not bad
    assert _report(3, "literal and symbol emission agree up to nonzero scalar", ok, f"{checked} emissions")


def test_criterion_4_rank_one_regression():
    checked = 0
    good = True
    for m_val, a in ((2, 2), (2, 3), (3, 3)):
        for nu in range(0, 3):
            lam = nu - a
            if lam > 1 - m_val or a < m_val:
                continue
            params = SystemParams(F(lam), F(nu), 1, m_val)
            legacy = legacy_order_one_operator(F(lam), F(nu), m_val)
            good = good and legacy == emit_operator(params, "paper").scaled(2)
            checked += 1
    ok = good and checked >= 5
    assert _report(4, "historical three-component operator equals twice the N=1 emission", ok, f"{checked} points")


def test_criterion_5_identity_suites():
    started = time.monotonic()
    mus = default_mu_values()
    results = gegenbauer_suite(max_ell=12, mu_values=mus) + hypergeom_suite(max_n=8)
    elapsed = time.monotonic() - started
    failures = sum(check.failures for check in results)
    cases = sum(check.cases for check in results)
    ok = failures == 0 and len(mus) >= 20 and elapsed < 60.0
    assert _report(5, "Gegenbauer and hypergeometric identity suites", ok, f"{cases} cases, {elapsed:.1f}s")


def test_criterion_6_compatibility_polynomials():
    checked = 0
    good = True
    for n_val in range(4):
        for m_val in range(n_val + 1, n_val + 4):
            for a in range(m_val + 2 * n_val + 2, m_val + 2 * n_val + 6):
                six = consistency_polynomials(n_val, a, m_val)
                good = good and six.p == six.q
                checked += 1
    ok = good and checked == 48
    assert _report(6, "compatibility polynomials coincide coefficientwise", ok, f"{checked} (N,m,a) triples")


def test_criterion_7_duality(desk_sweep):
    certificates, _, _ = desk_sweep
    involutions = [c.duality_involution_ok for c in certificates if c.duality_involution_ok is not None]
    mirrored = [
        c
        for c in certificates
        if c.params.m < 0 and (c.operator_scalar is not None or c.operator_order_ok is not None)
    ]
    bad = [c for c in mirrored if not c.operator_scalar or c.operator_order_ok is not True]
    ok = involutions and all(involutions) and len(mirrored) > 200 and not bad
    assert _report(
        7,
        "duality is an involution and maps generators to mirrored solutions",
        ok,
        f"{len(involutions)} involution checks, {len(mirrored)} mirrored emissions",
    )


def test_criterion_8_determinism(tmp_path):
    first = tmp_path / "jobs1.json"
    second = tmp_path / "jobs8.json"
    base = ["sweep", "--max-N", "1", "--m-span", "3", "--a-extra", "2"]
    code1 = main(base + ["--jobs", "1", "--out", str(first)])
    code2 = main(base + ["--jobs", "8", "--out", str(second)])
    ok = code1 == 0 and code2 == 0 and first.read_bytes() == second.read_bytes()
    assert _report(8, "certificate files byte-identical across --jobs 1 and --jobs 8", ok, f"{first.stat().st_size} bytes")
