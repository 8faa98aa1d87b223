import random

import pytest

from transdolbeault.errors import ShapeError, ValidationError
from transdolbeault.lie import LieAlgebra, bracket, subalgebra_report, validate_lie_algebra
from transdolbeault.linalg import Subspace, as_vector, basis_vector
from transdolbeault.scalars import GaussianRational, I

G = GaussianRational.of


def test_abelian_valid():
    assert validate_lie_algebra(LieAlgebra.abelian(4)).valid


def test_kt_valid(kt):
    assert validate_lie_algebra(kt.algebra).valid


def test_jacobi_violation_reported():
    bad = LieAlgebra.from_brackets(3, {(0, 1): {0: 1}, (0, 2): {1: 1}})
    report = validate_lie_algebra(bad)
    assert not report.valid
    (triple, defect) = report.violations[0]
    assert triple == (0, 1, 2)
    assert defect == basis_vector(3, 1)  # cyclic sum equals e2


def test_from_brackets_shape_errors():
    with pytest.raises(ShapeError):
        LieAlgebra.from_brackets(3, {(0, 1): [1, 0]})  # wrong vector length
    with pytest.raises(ShapeError):
        LieAlgebra.from_brackets(2, {(0, 5): {0: 1}})
    with pytest.raises(ValidationError):
        LieAlgebra.from_brackets(2, {(0, 1): {0: I}})  # complex structure constant


def test_antisymmetric_storage():
    L = LieAlgebra.from_brackets(3, {(1, 0): {2: 1}})
    assert L.bracket_basis(0, 1) == as_vector([0, 0, -1])
    assert L.bracket_basis(1, 0) == as_vector([0, 0, 1])
    assert not any(L.bracket_basis(1, 1))


def test_bracket_examples(kt):
    L = kt.algebra
    e = [basis_vector(4, i) for i in range(4)]
    assert bracket(L, e[0], e[1]) == e[2]
    assert not any(bracket(LieAlgebra.abelian(4), e[0], e[3]))
    rng = random.Random(3)
    x = as_vector([rng.randint(-4, 4) for _ in range(4)])
    assert not any(bracket(L, x, x))


def test_bracket_bilinear_over_gaussians(kt, iwasawa, h5r):
    rng = random.Random(5)
    for L in (kt.algebra, iwasawa.algebra, h5r.algebra):
        n = L.dim
        for _ in range(10):
            x, y, z = (
                as_vector([GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n)])
                for _ in range(3)
            )
            a = GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2))
            lhs = bracket(L, tuple(a * c for c in x), y)
            rhs = tuple(a * c for c in bracket(L, x, y))
            assert lhs == rhs
            sum_lhs = bracket(L, x, tuple(b + c for b, c in zip(y, z)))
            sum_rhs = tuple(
                b + c for b, c in zip(bracket(L, x, y), bracket(L, x, z))
            )
            assert sum_lhs == sum_rhs


def test_subalgebra_report_kt(kt):
    L = kt.algebra
    v = Subspace.from_rows(4, [basis_vector(4, 0), basis_vector(4, 2)])
    report = subalgebra_report(L, v)
    assert report.is_subalgebra and report.is_ideal


def test_subalgebra_report_trivial_cases(kt):
    L = kt.algebra
    assert subalgebra_report(L, Subspace.zero(4)) == subalgebra_report(L, Subspace.zero(4))
    zero = subalgebra_report(L, Subspace.zero(4))
    full = subalgebra_report(L, Subspace.full(4))
    assert zero.is_subalgebra and zero.is_ideal
    assert full.is_subalgebra and full.is_ideal


def test_subalgebra_witness(su2):
    L = su2.algebra
    v = Subspace.from_rows(3, [basis_vector(3, 0)])  # span{e1} in su(2)
    report = subalgebra_report(L, v)
    assert report.is_subalgebra and not report.is_ideal
    assert report.ideal_witness is not None


def test_ideal_implies_subalgebra_randomized(kt, iwasawa, su2, h5r):
    rng = random.Random(9)
    for L in (kt.algebra, iwasawa.algebra, su2.algebra, h5r.algebra):
        n = L.dim
        for _ in range(12):
            rows = [as_vector([rng.randint(-2, 2) for _ in range(n)]) for _ in range(rng.randint(0, n))]
            report = subalgebra_report(L, Subspace.from_rows(n, rows))
            if report.is_ideal:
                assert report.is_subalgebra
