import numpy as np
import pytest

import reference as ref
from dftladder.core import build_named_matrix, fifth_root_constants, max_abs
from dftladder.ladder import ladder_eigensystem
from dftladder.oracle import lcg_uniform
from dftladder.precision import to_float
from dftladder.sparse import (
    EigenspaceError,
    ParityClass,
    SparseMatrix,
    phi_x_product,
    reassemble,
    sparse_apply,
    split,
)


def test_phi_x_matches_reference():
    np.testing.assert_allclose(phi_x_product(), ref.dft(5) @ ref.position(5), atol=1e-14)


def test_phi_x_entry_01():
    assert phi_x_product()[0, 1] == pytest.approx(0.8506508, abs=1e-7)


def test_phi_x_first_column_and_trace():
    m = phi_x_product()
    assert np.all(np.abs(m[:, 0]) == 0)
    assert abs(np.trace(m)) <= 1e-13


@pytest.mark.parametrize("variant", ["symmetric", "antisymmetric"])
def test_reconstruction_entrywise(variant, config):
    err = max_abs(reassemble(split(variant, config), config) - phi_x_product(config))
    assert to_float(err) <= 1e-2 * config.epsilon


def test_sparsity_counts():
    assert split("symmetric").sparse.nnz == 8
    assert split("antisymmetric").sparse.nnz == 10


def test_symmetric_sparse_entry():
    dense = split("symmetric").sparse.to_dense()
    assert dense[1, 1] == pytest.approx(1.6180340, abs=1e-7)


def test_annihilators_on_random_vectors():
    draws = lcg_uniform(11, 500)
    sym, anti = split("symmetric").annihilator, split("antisymmetric").annihilator
    for t in range(100):
        a, b, c = draws[3 * t:3 * t + 3]
        v = np.array([a, b, c, c, b])
        assert np.linalg.norm(sym @ v) <= 1e-13 * np.linalg.norm(v)
        w = np.array([0, b, c, -c, -b])
        assert np.linalg.norm(anti @ w) <= 1e-13 * np.linalg.norm(w)


def test_annihilators_do_not_kill_other_parity():
    v = np.array([0, 1.0, 2.0, -2.0, -1.0])
    assert np.linalg.norm(split("symmetric").annihilator @ v) > 1


def test_unknown_variant():
    with pytest.raises(ValueError):
        split("diagonal")


class TestSparseMatrix:
    def test_roundtrip_dense(self):
        m = np.array([[0, 2.0], [3.0, 0]])
        s = SparseMatrix.from_dense(m)
        assert s.nnz == 2
        np.testing.assert_array_equal(s.to_dense(), m)
        np.testing.assert_array_equal(s.apply(np.array([1.0, 1.0])), m @ [1.0, 1.0])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            SparseMatrix(2, ((0, 0, 1.0), (0, 0, 2.0)))

    def test_rejects_out_of_range(self):
        with pytest.raises(IndexError):
            SparseMatrix(2, ((2, 0, 1.0),))

    def test_rejects_explicit_zero(self):
        with pytest.raises(ValueError, match="zero"):
            SparseMatrix(2, ((0, 1, 0.0),))


class TestSparseRules:
    @pytest.mark.parametrize("n", range(5))
    @pytest.mark.parametrize("which", ["lowering", "raising"])
    def test_matches_dense_operator(self, n, which, config):
        f = ladder_eigensystem(config).pairs[n].vector
        dense = build_named_matrix(which, 5, config) @ f
        sparse = sparse_apply(f, n, which, config)
        scale = max(1, to_float(max_abs(dense)))
        assert to_float(max_abs(sparse - dense)) <= config.epsilon * scale

    def test_raise_ground_state_direction(self):
        k = fifth_root_constants()
        f0 = ladder_eigensystem().pairs[0].vector
        image = sparse_apply(f0, 0, "raising")
        target = np.array([0, k.xi1, k.c[1], -k.c[1], -k.xi1])
        assert ref.phase_distance(image / np.linalg.norm(image), target / np.linalg.norm(target)) <= 1e-12

    def test_lower_f2(self):
        k = fifth_root_constants()
        pairs = ladder_eigensystem().pairs
        image = sparse_apply(pairs[2].vector, 2, "lowering")
        expected = np.sqrt(k.s[1] * (k.s[1] - k.c[2]) / 2) * pairs[1].vector
        np.testing.assert_allclose(image, expected, atol=1e-12)

    def test_rejects_wrong_class(self):
        f1 = ladder_eigensystem().pairs[1].vector
        with pytest.raises(EigenspaceError) as info:
            sparse_apply(f1, 2, "raising")
        assert info.value.residual > 1e-10

    def test_rejects_non_eigenvector(self):
        with pytest.raises(EigenspaceError):
            sparse_apply(np.array([1.0, 2.0, 3.0, 3.0, 2.0]), 0, "raising")

    def test_check_can_be_skipped(self):
        v = np.array([1.0, 2.0, 3.0, 3.0, 2.0])
        out = sparse_apply(v, 0, "raising", check=False)
        assert out.shape == (5,)
        assert np.iscomplexobj(out)

    def test_rejects_bad_which_and_shape(self):
        f0 = ladder_eigensystem().pairs[0].vector
        with pytest.raises(ValueError):
            sparse_apply(f0, 0, "sideways")
        with pytest.raises(ValueError):
            sparse_apply(np.ones(4), 0, "raising")

    def test_parity_class(self):
        assert ParityClass(6).k == 2
        assert ParityClass(3).parity == "antisymmetric"
