import pytest

from lefkit.errors import OutOfRangeError, TooLargeError, ZeroPolynomialError
from lefkit.exactmath import RatMatrix, mat_rank
from lefkit.families import FamilyKind, FamilySpec, make_invariant
from lefkit.macaulay import (
    annihilator_basis,
    catalecticant,
    ensure_within_budget,
    hilbert_function,
    hilbert_report_rows,
    max_catalecticant_cells,
    resolve_budget,
    socle_check,
)
from lefkit.polyring import Poly, contract, dim_of_degree, poly_pow

from _oracles import naive_rank

DET2 = make_invariant(FamilySpec(FamilyKind.SYM_DET, 2))
DET3 = make_invariant(FamilySpec(FamilyKind.SYM_DET, 3))
QUADRIC2 = Poly(2, {(2, 0): 1, (0, 2): 1})  # x1^2 + x2^2
CUBE = Poly(2, {(3, 0): 1})  # x1^3 in two variables


def test_catalecticant_diagonal_quadric():
    cat = catalecticant(QUADRIC2, 1)
    assert cat.matrix == RatMatrix.from_rows([[2, 0], [0, 2]])
    assert mat_rank(cat.matrix) == 2


def test_catalecticant_cube_rank_one():
    cat = catalecticant(CUBE, 1)
    assert mat_rank(cat.matrix) == 1
    # the x2 row is zero
    assert all(cat.matrix.entry(1, j) == 0 for j in range(cat.matrix.cols))


def test_catalecticant_det2_middle():
    cat = catalecticant(DET2, 1)
    # rows x11, x12, x22 map to x22, -2 x12, x11
    assert cat.matrix == RatMatrix.from_rows(
        [[0, 0, 1], [0, -2, 0], [1, 0, 0]]
    )
    assert mat_rank(cat.matrix) == 3


def test_catalecticant_labels_and_shape():
    cat = catalecticant(DET3, 2)
    assert len(cat.row_monomials) == dim_of_degree(6, 2) == cat.matrix.rows
    assert len(cat.col_monomials) == dim_of_degree(6, 1) == cat.matrix.cols
    assert list(cat.row_monomials) == sorted(cat.row_monomials, reverse=True)


def test_catalecticant_errors():
    with pytest.raises(OutOfRangeError):
        catalecticant(DET2, 3)
    with pytest.raises(ZeroPolynomialError):
        catalecticant(Poly.zero(3), 0)
    with pytest.raises(ValueError):
        catalecticant(Poly(2, {(1, 0): 1, (2, 0): 1}), 0)


def test_catalecticant_rank_against_naive_elimination():
    for i in range(4):
        cat = catalecticant(DET3, i)
        assert mat_rank(cat.matrix) == naive_rank(cat.matrix.dense())


def test_hilbert_det3_narayana():
    assert hilbert_function(DET3).values == (1, 6, 6, 1)


def test_hilbert_det2_squared():
    f = make_invariant(FamilySpec(FamilyKind.SYM_DET, 2, 2))
    assert hilbert_function(f).values == (1, 3, 6, 3, 1)


def test_hilbert_quadric_any_n():
    for n in (2, 3, 5):
        f = make_invariant(FamilySpec(FamilyKind.QUADRIC, n))
        assert hilbert_function(f).values == (1, n, 1)


def test_hilbert_text():
    assert hilbert_function(DET3).as_text() == "(1, 6, 6, 1)"


def test_annihilator_empty_for_full_pairing():
    assert annihilator_basis(QUADRIC2, 1) == []


def test_annihilator_of_cube():
    (p,) = annihilator_basis(CUBE, 1)
    assert p == Poly(2, {(0, 1): 1})


def test_annihilator_det2_degree_two():
    basis = annihilator_basis(DET2, 2)
    assert len(basis) == 5  # dim R_2 = 6, h_2 = 1
    for p in basis:
        assert contract(p, DET2).is_zero()


def test_annihilator_recontracts_to_zero_everywhere():
    for n, s in [(2, 1), (2, 2), (3, 1)]:
        f = make_invariant(FamilySpec(FamilyKind.SYM_DET, n, s))
        c = f.homogeneous_degree()
        for i in range(c + 1):
            basis = annihilator_basis(f, i)
            assert len(basis) == dim_of_degree(f.nvars, i) - hilbert_function(f).values[i]
            for p in basis:
                assert contract(p, f).is_zero()


def test_socle_check():
    assert socle_check(DET3)
    assert socle_check(make_invariant(FamilySpec(FamilyKind.PFAFFIAN, 4)))
    assert socle_check(CUBE)
    assert hilbert_function(CUBE).values == (1, 1, 1, 1)


def test_pfaffian_hilbert():
    f = make_invariant(FamilySpec(FamilyKind.PFAFFIAN, 4))
    assert hilbert_function(f).values == (1, 6, 1)


def test_transpose_rank_duality():
    for f in (DET3, make_invariant(FamilySpec(FamilyKind.SYM_DET, 2, 2))):
        c = f.homogeneous_degree()
        for i in range(c + 1):
            a = mat_rank(catalecticant(f, i).matrix)
            b = mat_rank(catalecticant(f, c - i).matrix)
            assert a == b


def test_monotone_bound():
    for f in (DET2, DET3, CUBE):
        c = f.homogeneous_degree()
        fn = hilbert_function(f)
        for i, h in enumerate(fn.values):
            assert h <= min(dim_of_degree(f.nvars, i), dim_of_degree(f.nvars, c - i))


def test_corner_variable_power_membership():
    # x_nn^(s+1) lies in the annihilator while x_nn^s does not
    for n, s in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        spec = FamilySpec(FamilyKind.SYM_DET, n, s)
        f = make_invariant(spec)
        corner = Poly.variable(spec.nvars, spec.nvars - 1)  # x_nn is last in layout
        assert contract(poly_pow(corner, s + 1), f).is_zero()
        assert not contract(poly_pow(corner, s), f).is_zero()


def test_budget_guard():
    assert max_catalecticant_cells(3, 2) == 3 * 3
    with pytest.raises(TooLargeError):
        ensure_within_budget(3, 2, budget=8)
    ensure_within_budget(3, 2, budget=9)
    with pytest.raises(ValueError):
        resolve_budget(0)


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("LEFKIT_BUDGET", "5")
    with pytest.raises(TooLargeError):
        ensure_within_budget(3, 2)
    monkeypatch.delenv("LEFKIT_BUDGET")
    ensure_within_budget(3, 2)


def test_report_rows():
    rows = hilbert_report_rows(DET3, hilbert_function(DET3))
    assert rows[1] == {"degree": 1, "dim_R_i": 6, "rank": 6, "kernel_dim": 0}
    assert rows[2] == {"degree": 2, "dim_R_i": 21, "rank": 6, "kernel_dim": 15}
