import cmath

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from dftladder.core import build_named_matrix, dft_matrix, parity_decompose, reflection_indices
from dftladder.ladder import ladder_eigensystem
from dftladder.oracle import eigenvector_match, hermitian_eigensolver
from dftladder.sparse import sparse_apply, split

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
dims = st.integers(min_value=2, max_value=64)


@given(st.lists(finite, min_size=3, max_size=3).filter(lambda v: max(map(abs, v)) > 1e-6))
def test_symmetric_annihilation(abc):
    a, b, c = abc
    v = np.array([a, b, c, c, b])
    assert np.linalg.norm(split("symmetric").annihilator @ v) <= 1e-13 * np.linalg.norm(v)


@given(st.lists(finite, min_size=2, max_size=2).filter(lambda v: max(map(abs, v)) > 1e-6))
def test_antisymmetric_annihilation(bc):
    b, c = bc
    v = np.array([0, b, c, -c, -b])
    assert np.linalg.norm(split("antisymmetric").annihilator @ v) <= 1e-13 * np.linalg.norm(v)


@given(st.lists(finite, min_size=2, max_size=64))
def test_parity_decomposition(values):
    v = np.array(values)
    sym, anti = parity_decompose(v)
    idx = reflection_indices(len(v))
    np.testing.assert_allclose(sym + anti, v, atol=1e-12)
    np.testing.assert_array_equal(sym[idx], sym)
    np.testing.assert_array_equal(anti[idx], -anti)


@settings(max_examples=30)
@given(dims)
def test_dft_unitary_any_dimension(n):
    phi = dft_matrix(n)
    assert np.linalg.norm(phi.conj().T @ phi - np.eye(n)) <= 1e-12 * n


@settings(max_examples=30)
@given(dims)
def test_number_commutes_with_reflection(n):
    p, number = build_named_matrix("reflection", n), build_named_matrix("number", n)
    assert np.linalg.norm(p @ number - number @ p) <= 1e-12 * n


@given(st.floats(min_value=0, max_value=2 * np.pi), st.integers(min_value=0, max_value=4))
def test_match_phase_invariant(theta, n):
    f = ladder_eigensystem().pairs[n].vector
    assert eigenvector_match(f, cmath.exp(1j * theta) * f) <= 1e-12


@given(st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False),
       st.integers(min_value=0, max_value=3), st.sampled_from(["lowering", "raising"]))
def test_sparse_rule_is_linear(alpha, n, which):
    f = ladder_eigensystem().pairs[n].vector
    np.testing.assert_allclose(sparse_apply(alpha * f, n, which), alpha * sparse_apply(f, n, which),
                               atol=1e-12 * abs(alpha))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=8).flatmap(
    lambda n: st.lists(finite, min_size=2 * n * n, max_size=2 * n * n).map(lambda xs: (n, xs))))
def test_jacobi_matches_lapack(data):
    n, xs = data
    raw = np.array(xs[:n * n]).reshape(n, n) + 1j * np.array(xs[n * n:]).reshape(n, n)
    m = raw + raw.conj().T
    result = hermitian_eigensolver(m)
    scale = max(1.0, np.linalg.norm(m))
    np.testing.assert_allclose(result.eigenvalues, np.linalg.eigvalsh(m), atol=1e-12 * scale)
    v = result.eigenvectors
    assert np.linalg.norm(m @ v - v * result.eigenvalues) <= 1e-12 * scale
