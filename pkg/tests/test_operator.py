"""Operator emission: scalar blocks, symbol route, literal route, duality."""

from fractions import Fraction as F

import pytest

from breakops.closedform import dual_solution, lambda_set
from breakops.fsystem import NoSolutionError, SystemParams, solve_xi
from breakops.operator import (
    DiffOperator,
    circle_power,
    compare_up_to_scalar,
    emit_operator,
    juhl_operator,
    symbol_psi,
    symbol_to_operator,
)
from breakops.poly import MultiPoly, VectorSymbol
from breakops.rational import GaussianRational
from breakops.verify import legacy_order_one_operator


def test_juhl_low_orders():
    lam = F(-3)
    assert juhl_operator(lam, lam) == DiffOperator({(0, 0, 0, 0): 1})
    assert juhl_operator(lam, lam + 1) == DiffOperator({(0, 0, 0, 1): 2})
    # degree 2: 2*lam*dx3^2 + 4 dz dzbar, from 2*lam*y^2 - x at x = -4 dz dzbar
    assert juhl_operator(lam, lam + 2) == DiffOperator({(0, 0, 0, 2): 2 * lam, (0, 1, 1, 0): 4})


def test_juhl_requires_natural_order():
    with pytest.raises(ValueError):
        juhl_operator(F(0), F(-1))
    with pytest.raises(ValueError):
        juhl_operator(F(0), F(1, 2))


def test_circle_power():
    i = GaussianRational(F(0), F(1))
    assert circle_power(0) == MultiPoly.term(0, 0, 0)
    assert circle_power(1) == MultiPoly({(1, 0, 0): 1, (0, 1, 0): i})
    # (z1 + i z2)^2 = z1^2 + 2i z1 z2 - z2^2
    assert circle_power(2) == MultiPoly({(2, 0, 0): 1, (1, 1, 0): 2 * i, (0, 2, 0): -1})
    assert circle_power(1, conjugate=True) == MultiPoly({(1, 0, 0): 1, (0, 1, 0): -i})


def test_symbol_to_operator_generators():
    # the three stated monomial rules
    assert symbol_to_operator(VectorSymbol((MultiPoly.term(0, 0, 0),))) == DiffOperator(
        {(0, 0, 0, 0): 1}
    )
    assert symbol_to_operator(VectorSymbol((MultiPoly.term(0, 0, 2),))) == DiffOperator(
        {(0, 0, 0, 2): 1}
    )
    radial = MultiPoly({(2, 0, 0): 1, (0, 2, 0): 1})  # z1^2 + z2^2
    assert symbol_to_operator(VectorSymbol((radial * circle_power(1),))) == DiffOperator(
        {(0, 1, 2, 0): 8}
    )
    assert symbol_to_operator(VectorSymbol((circle_power(3),))) == DiffOperator({(0, 0, 3, 0): 8})
    assert symbol_to_operator(VectorSymbol((circle_power(3, conjugate=True),))) == DiffOperator(
        {(0, 3, 0, 0): 8}
    )


def test_symbol_psi_structure():
    p = SystemParams(F(-1), F(2), 1, 2)
    gen = solve_xi(p).generator
    psi = symbol_psi(p, gen)
    assert len(psi) == 3
    assert psi.components[0].is_zero() and psi.components[1].is_zero()
    assert psi.components[2] == circle_power(3)  # inflate(0, 1) * (z1+i z2)^3
    for comp in psi.components:
        assert comp.is_zero() or comp.homogeneous_degree() == p.a


def test_symbol_psi_homogeneity_general():
    p = SystemParams(F(-4), F(1), 2, 3)
    gen = solve_xi(p).generator
    psi = symbol_psi(p, gen)
    degrees = {c.homogeneous_degree() for c in psi.components if not c.is_zero()}
    assert degrees == {p.a}


def test_emit_rank_one_reference():
    p = SystemParams(F(-1), F(2), 1, 2)
    paper = emit_operator(p, "paper")
    canonical = emit_operator(p, "canonical")
    assert paper == DiffOperator({(2, 0, 3, 0): -2})
    assert canonical == DiffOperator({(2, 0, 3, 0): 8})
    assert compare_up_to_scalar(paper, canonical) == GaussianRational(F(-4))


def test_emit_rank_zero_single_block():
    p = SystemParams(F(-1), F(1), 0, 2)
    emitted = emit_operator(p, "paper")
    assert emitted == DiffOperator({(0, 0, 2, 0): 1})  # B(0,0) = 1 on dzbar^m


def test_emit_requires_existence():
    with pytest.raises(NoSolutionError):
        emit_operator(SystemParams(F(0), F(3), 1, 2), "paper")
    with pytest.raises(ValueError):
        emit_operator(SystemParams(F(-1), F(2), 1, 2), "exotic")


def test_emit_total_order():
    for n_val, m_val, a in ((1, 2, 4), (2, 3, 6), (2, 4, 5)):
        for lam in sorted(lambda_set(n_val, a, m_val)):
            p = SystemParams(F(lam), F(lam + a), n_val, m_val)
            assert emit_operator(p, "paper").orders() == {a}


def test_emit_routes_proportional():
    for n_val, m_val, a in ((0, 1, 3), (1, 2, 3), (1, 3, 5), (2, 3, 4)):
        for lam in sorted(lambda_set(n_val, a, m_val)):
            p = SystemParams(F(lam), F(lam + a), n_val, m_val)
            scalar = compare_up_to_scalar(emit_operator(p, "paper"), emit_operator(p, "canonical"))
            assert scalar is not None and bool(scalar), (n_val, m_val, a, lam)


def test_emit_negative_m_via_duality():
    for n_val, m_val, a in ((1, 2, 3), (2, 3, 5)):
        for lam in sorted(lambda_set(n_val, a, m_val)):
            pos = SystemParams(F(lam), F(lam + a), n_val, m_val)
            neg = pos.mirrored()
            paper = emit_operator(neg, "paper")
            mirrored_psi = dual_solution(symbol_psi(pos, solve_xi(pos).generator), pos)
            canonical = symbol_to_operator(mirrored_psi)
            scalar = compare_up_to_scalar(paper, canonical)
            assert scalar is not None and bool(scalar)
            assert paper.orders() == {a}
            assert emit_operator(neg, "canonical") == canonical


def test_compare_up_to_scalar_conventions():
    base = DiffOperator({(0, 1, 0, 0): 1, (1, 0, 0, 2): F(1, 3)})
    assert compare_up_to_scalar(base, base) == GaussianRational(F(1))
    assert compare_up_to_scalar(base, base.scaled(2)) == GaussianRational(F(2))
    assert compare_up_to_scalar(base, DiffOperator()) == GaussianRational()
    assert compare_up_to_scalar(DiffOperator(), base) is None
    other = DiffOperator({(0, 1, 0, 0): 1})
    assert compare_up_to_scalar(base, other) is None


def test_legacy_rank_three_relation():
    # the historical operator equals exactly twice the general emission
    checked = 0
    for m_val, a in ((2, 2), (2, 3), (3, 3)):
        for nu in range(0, 3):
            lam = nu - a
            if lam > 1 - m_val or a < m_val:
                continue
            p = SystemParams(F(lam), F(nu), 1, m_val)
            assert legacy_order_one_operator(F(lam), F(nu), m_val) == emit_operator(
                p, "paper"
            ).scaled(2)
            checked += 1
    assert checked >= 5


def test_operator_json_and_latex_order():
    p = SystemParams(F(-2), F(1), 1, 2)
    emitted = emit_operator(p, "paper")
    doc = emitted.to_json()
    keys = [(t["d"], t["p"], t["q"], t["r"]) for t in doc]
    assert keys == sorted(keys)
    rendered = emitted.latex()
    assert "\\otimes u_" in rendered
