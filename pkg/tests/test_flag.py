import random
from itertools import combinations

import pytest

from conftest import instance_pool
from transdolbeault.acs import lie_derivative_endo, nijenhuis_image
from transdolbeault.catalog import random_acs
from transdolbeault.errors import PreconditionError
from transdolbeault.flag import classify, derived_flag, t10_derived_involutive
from transdolbeault.lie import LieAlgebra, bracket
from transdolbeault.linalg import Subspace, basis_vector, column_space, mat_vec, subspace_sum


def test_abelian_flag():
    L = LieAlgebra.abelian(4)
    fl = derived_flag(L, random_acs(L, 2))
    assert fl.stable_index == 1
    assert fl.limit.is_zero()
    assert [s.rank for s in fl.stages] == [0]


def test_kt_flag(kt):
    fl = derived_flag(kt.algebra, kt.acs)
    assert fl.stable_index == 1
    assert fl.limit == Subspace.from_rows(4, [basis_vector(4, 0), basis_vector(4, 2)])


def test_kt_integrable_flag(kt_integrable):
    fl = derived_flag(kt_integrable.algebra, kt_integrable.acs)
    assert fl.limit.is_zero()


def test_t10_involutive_examples(kt):
    assert t10_derived_involutive(kt.algebra, kt.acs, 1).involutive
    L = LieAlgebra.abelian(4)
    assert t10_derived_involutive(L, random_acs(L, 1), 1).involutive
    with pytest.raises(PreconditionError):
        t10_derived_involutive(kt.algebra, kt.acs, 2)


def test_t10_involutive_at_stable_index(strict_entries):
    for entry in strict_entries:
        fl = derived_flag(entry.algebra, entry.acs)
        assert t10_derived_involutive(entry.algebra, entry.acs, fl.stable_index).involutive


def test_classify_examples(kt, kt_integrable, maxcand):
    assert classify(kt_integrable.algebra, kt_integrable.acs).class_name == "Integrable"
    c = classify(kt.algebra, kt.acs)
    assert c.class_name == "MinimallyNonIntegrable"
    assert c.dim_im_N == 2 and c.dim2_refinement
    L = LieAlgebra.abelian(6)
    assert classify(L, random_acs(L, 3)).class_name == "Integrable"
    assert classify(maxcand.algebra, maxcand.acs).class_name == "MaximallyNonIntegrable"


def test_classify_serialization(kt):
    doc = classify(kt.algebra, kt.acs).to_json()
    assert doc == {
        "class": "MinimallyNonIntegrable",
        "flag_dims": [2],
        "dim_im_N": 2,
        "dim2_refinement": True,
    }


def _flag_invariants(algebra, acs):
    fl = derived_flag(algebra, acs)
    dims = [s.rank for s in fl.stages]
    assert all(a < b for a, b in zip(dims, dims[1:]))  # strict growth to the fixed point
    assert fl.stable_index <= algebra.dim
    assert fl.stages[0] == nijenhuis_image(algebra, acs)
    for stage in fl.stages:
        for row in stage.basis:
            assert stage.contains(mat_vec(acs.J, row))
    limit = fl.limit
    for u, v in combinations(limit.basis, 2):
        assert limit.contains(bracket(algebra, u, v))
    for u in limit.basis:
        assert limit.contains_subspace(column_space(lie_derivative_endo(algebra, acs, u)))
    assert limit.contains_subspace(fl.stages[0])


def test_flag_invariants_catalog(strict_entries):
    for entry in strict_entries:
        _flag_invariants(entry.algebra, entry.acs)


def test_flag_invariants_randomized():
    for algebra, acs, _ in instance_pool(20, start_seed=100):
        _flag_invariants(algebra, acs)


def test_integrable_iff_limit_zero_randomized():
    for algebra, acs, _ in instance_pool(15, start_seed=300):
        fl = derived_flag(algebra, acs)
        im_zero = nijenhuis_image(algebra, acs).is_zero()
        assert fl.limit.is_zero() == im_zero
        assert (classify(algebra, acs).class_name == "Integrable") == im_zero


def _grow_shuffled(algebra, acs, d, rng):
    """The flag step with generators enumerated in random order."""
    gens = list(d.basis)
    rng.shuffle(gens)
    nxt = d
    for u in gens:
        nxt = subspace_sum(nxt, column_space(lie_derivative_endo(algebra, acs, u)))
    pairs = list(combinations(gens, 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        w = bracket(algebra, u, v)
        if any(w):
            nxt = subspace_sum(nxt, Subspace.from_rows(algebra.dim, [w]))
    return nxt


def test_flag_order_independent(kt, h5r, maxcand):
    rng = random.Random(41)
    for entry in (kt, h5r, maxcand):
        fl = derived_flag(entry.algebra, entry.acs)
        d = fl.stages[0]
        for k in range(1, fl.stable_index):
            d_shuffled = _grow_shuffled(entry.algebra, entry.acs, d, rng)
            assert d_shuffled == fl.stages[k]
            d = d_shuffled
        assert _grow_shuffled(entry.algebra, entry.acs, fl.limit, rng) == fl.limit
