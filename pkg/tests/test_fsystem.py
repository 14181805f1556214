"""The coupled system: assembly, exact nullspace, and the spectral dimension."""

from fractions import Fraction as F

import pytest

from breakops.closedform import lambda_set
from breakops.fsystem import (
    ExactMatrix,
    SolutionVector,
    SystemParams,
    UnsupportedRegimeError,
    apply_L,
    assemble_system,
    equation_index,
    hom_dimension,
    k_support,
    nullspace,
    proportionality,
    solve_xi,
    unknown_columns,
)
from breakops.poly import Poly, ZERO_POLY, monomial


def test_params_reject_small_m():
    with pytest.raises(UnsupportedRegimeError):
        SystemParams(F(0), F(0), 2, 1)
    with pytest.raises(UnsupportedRegimeError):
        SystemParams(F(0), F(0), 1, -1)
    assert SystemParams(F(0), F(0), 1, -2).abs_m == 2


def test_derived_a():
    assert SystemParams(F(-1), F(2), 1, 2).a == 3
    assert SystemParams(F(1, 2), F(7, 2), 1, 2).a == 3
    assert SystemParams(F(0), F(1, 2), 1, 2).a is None
    assert SystemParams(F(2), F(0), 1, 2).a is None  # negative difference


def test_k_support():
    assert k_support(1, 2) == (1, 2, 3)
    assert k_support(0, 5) == (5,)
    assert k_support(2, 3) == (1, 2, 3, 4, 5)
    assert k_support(1, -2) == (1, 2, 3)


def test_hom_dimension():
    assert hom_dimension(SystemParams(F(-1), F(2), 1, 2)) == 4  # dims 2+1+1 over k=1,2,3
    assert hom_dimension(SystemParams(F(0), F(1), 1, 2)) == 1
    assert hom_dimension(SystemParams(F(0), F(1, 2), 1, 2)) == 0
    assert hom_dimension(SystemParams(F(0), F(0), 1, 2)) == 0  # a=0 < min K = 1


def test_apply_L_on_probe_vector():
    # S_5^{-2}(1) - 2 d/dt(t) = 5 - 2 = 3 on the raw probe (f0=1, f1=t)
    p = SystemParams(F(-1), F(2), 1, 2)
    probe = SolutionVector(p, [monomial(1), Poly([1]), ZERO_POLY], validate=False)
    assert apply_L("A", "+", 0, p, probe) == Poly([3])


def test_apply_L_zero_vector_and_range():
    p = SystemParams(F(-1), F(2), 1, 2)
    zero = SolutionVector(p, [ZERO_POLY] * 3)
    for kind, sign, j in equation_index(1):
        assert apply_L(kind, sign, j, p, zero).is_zero()
    with pytest.raises(ValueError):
        apply_L("A", "+", 2, p, zero)
    with pytest.raises(ValueError):
        apply_L("B", "+", 0, p, zero)


def test_assemble_column_layout():
    p = SystemParams(F(-1), F(2), 1, 2)
    assert unknown_columns(p) == [(1, 2), (1, 0), (2, 1), (3, 0)]
    assert assemble_system(p).ncols == 4
    # N=0: only the two A_0 equations contribute rows
    p0 = SystemParams(F(-2), F(0), 0, 1)
    assert len(equation_index(0)) == 2
    assert assemble_system(p0).ncols == hom_dimension(p0)


def test_assemble_empty_blocks():
    # a = m - N: blocks with a - k < 0 contribute no columns
    p = SystemParams(F(0), F(1), 1, 2)
    assert unknown_columns(p) == [(1, 0)]


def test_assemble_requires_natural_a():
    with pytest.raises(ValueError):
        assemble_system(SystemParams(F(0), F(1, 2), 1, 2))


def test_nullspace_identity_and_zero():
    assert nullspace(ExactMatrix(((F(1), F(0)), (F(0), F(1))), 2)) == []
    assert len(nullspace(ExactMatrix(((F(0),) * 3, (F(0),) * 3), 3))) == 3


def test_nullspace_normalization():
    # elimination by hand gives span{(-1, 1, 0)}; normalized so the first
    # nonzero entry is 1 this is (1, -1, 0)
    basis = nullspace(ExactMatrix(((F(1), F(1), F(0)), (F(0), F(0), F(1))), 3))
    assert basis == [(F(1), F(-1), F(0))]


def test_nullspace_rational_entries():
    mat = ExactMatrix(((F(1, 2), F(1, 3), F(0)), (F(0), F(2, 7), F(2, 7))), 3)
    (vec,) = nullspace(mat)
    for row in mat.rows:
        assert sum(c * v for c, v in zip(row, vec)) == 0
    assert vec[0] == 1


def test_solve_reference_points():
    assert solve_xi(SystemParams(F(-1), F(2), 1, 2)).dimension == 1
    assert solve_xi(SystemParams(F(0), F(3), 1, 2)).dimension == 0
    assert solve_xi(SystemParams(F(1, 2), F(7, 2), 1, 2)).dimension == 0


def test_solve_rejects_wrong_orientation():
    with pytest.raises(UnsupportedRegimeError):
        solve_xi(SystemParams(F(-1), F(2), 1, -2))


def test_generator_at_reference_point():
    res = solve_xi(SystemParams(F(-1), F(2), 1, 2))
    gen = res.generator
    assert gen.g(1).is_zero() and gen.g(2).is_zero()
    assert gen.g(3) == Poly([1])
    assert gen.f(-1) == gen.g(3)


def test_generator_satisfies_all_equations_and_spaces():
    for n_val, m_val, a in [(1, 2, 4), (2, 3, 5), (2, 4, 8), (3, 4, 6)]:
        for lam in sorted(lambda_set(n_val, a, m_val)):
            p = SystemParams(F(lam), F(lam + a), n_val, m_val)
            res = solve_xi(p)
            assert res.dimension == 1, (n_val, m_val, a, lam)
            for kind, sign, j in equation_index(n_val):
                assert apply_L(kind, sign, j, p, res.generator).is_zero()


def test_dimension_zero_for_non_integer_lambda():
    for lam in (F(1, 2), F(-7, 3), F(5, 4)):
        for a in (2, 3, 6):
            p = SystemParams(lam, lam + a, 1, 2)
            assert solve_xi(p).dimension == 0


def test_hom_dimension_equals_columns():
    for n_val in range(3):
        for m_val in (n_val + 1, n_val + 2):
            for a in range(m_val - n_val, m_val + n_val + 3):
                p = SystemParams(F(-2), F(-2 + a), n_val, m_val)
                assert hom_dimension(p) == assemble_system(p).ncols


def test_proportionality_helper():
    p = SystemParams(F(-1), F(2), 1, 2)
    gen = solve_xi(p).generator
    assert proportionality(gen, gen.scaled(F(3, 7))).re == F(3, 7)
    assert proportionality(gen, SolutionVector(p, [ZERO_POLY] * 3)).re == 0
    assert proportionality(SolutionVector(p, [ZERO_POLY] * 3), gen) is None


def test_matrix_json():
    doc = assemble_system(SystemParams(F(0), F(1), 1, 2)).to_json()
    assert doc["cols"] == 1 and doc["rows"] == len(doc["entries"])
    assert all(isinstance(x, str) for row in doc["entries"] for x in row)


def _kernel_dimension_by_plain_elimination(rows, ncols):
    """Independent oracle: textbook Gaussian elimination over Fraction."""
    work = [list(row) for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col] / lead
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return ncols - rank


def test_nullspace_against_plain_elimination():
    import random

    rng = random.Random(99)
    for trial in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = tuple(
            tuple(F(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(ncols))
            for _ in range(nrows)
        )
        mat = ExactMatrix(rows, ncols)
        basis = nullspace(mat)
        assert len(basis) == _kernel_dimension_by_plain_elimination(rows, ncols)
        for vec in basis:
            for row in rows:
                assert sum(c * v for c, v in zip(row, vec)) == 0


def test_nullspace_on_assembled_systems_against_plain_elimination():
    for n_val, m_val, a, lam in [(1, 2, 3, -1), (2, 3, 5, -4), (2, 3, 6, 0), (3, 4, 4, -2)]:
        mat = assemble_system(SystemParams(F(lam), F(lam + a), n_val, m_val))
        expected = _kernel_dimension_by_plain_elimination(mat.rows, mat.ncols)
        assert len(nullspace(mat)) == expected
