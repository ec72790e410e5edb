"""Named matrices of the finite oscillator model and small dense linear algebra.

Vectors and matrices are plain numpy arrays: ``complex128`` in binary64 mode,
``dtype=object`` arrays of mpmath ``mpc`` in extended mode.  All indices are
0-based and wrap modulo the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .precision import BINARY64, PrecisionConfig, sqrt_of

MIN_DIM = 2
MAX_DIM = 64

MATRIX_KINDS = (
    "circulant",
    "backward_identity",
    "reflection",
    "position",
    "derivative",
    "momentum",
    "lowering",
    "raising",
    "number",
    "partner_number",
)


class DimensionError(ValueError):
    """Dimension outside the supported range, or non-conformable operands."""


def check_dim(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    if not MIN_DIM <= n <= MAX_DIM:
        raise DimensionError(f"dimension {n} outside supported range [{MIN_DIM}, {MAX_DIM}]")
    return int(n)


# ---------------------------------------------------------------------------
# roots of unity and the fifth-root constants


def unit_roots(n: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """``exp(2*pi*i*r/n)`` for r = 0..n-1, conjugate-symmetric by construction."""
    bk = config.backend
    theta = 2 * bk.pi / n
    roots = [bk.cplx(1)] * n
    for r in range(1, n // 2 + 1):
        z = bk.cplx(bk.cos(r * theta), bk.sin(r * theta))
        if 2 * r == n:
            z = bk.cplx(-1)
        roots[r] = z
        roots[n - r] = z.conjugate()
    return bk.array(roots)


@dataclass(frozen=True)
class FifthRootConstants:
    """q = exp(2 pi i/5) and the derived reals s_n = 2 sin(2 pi n/5), c_n = 2 cos(2 pi n/5)."""

    q: complex
    s: tuple
    c: tuple
    xi0: float
    xi1: float
    sqrt5: float

    def identity_residuals(self) -> dict[str, float]:
        s, c = self.s, self.c
        xi1 = self.xi1
        return {
            "q5_minus_1": abs(self.q**5 - 1),
            "s1_s2_sqrt5": abs(s[1] * s[2] - self.sqrt5),
            "c1_minus_c2_sqrt5": abs(c[1] - c[2] - self.sqrt5),
            "c1_c2_plus_1": abs(c[1] * c[2] + 1),
            "c1_plus_c2_plus_1": abs(c[1] + c[2] + 1),
            "c2_xi1_squared": abs(c[2] * xi1**2 - (c[1] - 2 * s[1] * xi1)),
        }


@lru_cache(maxsize=None)
def _fifth_root_constants(mode: str, digits: int) -> FifthRootConstants:
    config = PrecisionConfig(mode, digits)
    bk = config.backend
    theta = 2 * bk.pi / 5
    s1, s2 = 2 * bk.sin(theta), 2 * bk.sin(2 * theta)
    c1, c2 = 2 * bk.cos(theta), 2 * bk.cos(2 * theta)
    zero = bk.real(0)
    return FifthRootConstants(
        q=bk.cplx(c1 / 2, s1 / 2),
        s=(zero, s1, s2, -s2, -s1),
        c=(bk.real(2), c1, c2, c2, c1),
        xi0=s1 - 2 * c2,
        xi1=1 + s2,
        sqrt5=bk.sqrt(bk.real(5)),
    )


def fifth_root_constants(config: PrecisionConfig = BINARY64) -> FifthRootConstants:
    return _fifth_root_constants(config.mode, config.digits)


# ---------------------------------------------------------------------------
# matrix builders


def dft_matrix(n: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """Unitary DFT matrix with entries n**-1/2 * q**(k*l), q = exp(2 pi i/n)."""
    n = check_dim(n)
    bk = config.backend
    roots = unit_roots(n, config)
    k = np.arange(n)
    return roots[np.outer(k, k) % n] / bk.sqrt(bk.real(n))


def _position_diagonal(n: int, config: PrecisionConfig) -> np.ndarray:
    if n == 5:
        return config.backend.array(fifth_root_constants(config).s)
    roots = unit_roots(n, config)
    return config.backend.array([2 * z.imag for z in roots])


def reflection_indices(n: int) -> np.ndarray:
    return (-np.arange(n)) % n


def build_named_matrix(kind: str, n: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """Build one of the named operators of dimension ``n``.

    ``derivative`` is C - C^T with (C)_{kl} = delta_{k,l-1}, so (D v)_k = v_{k+1} - v_{k-1};
    ``momentum`` is -i D, ``lowering`` is (X + D)/sqrt(2) and ``raising`` its transpose.
    """
    kind = kind.replace("-", "_")
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {', '.join(MATRIX_KINDS)}")
    n = check_dim(n)
    bk = config.backend
    idx = np.arange(n)

    if kind == "circulant":
        m = bk.zeros((n, n))
        m[idx, (idx + 1) % n] = bk.cplx(1)
        return m
    if kind == "backward_identity":
        m = bk.zeros((n, n))
        m[idx, n - 1 - idx] = bk.cplx(1)
        return m
    if kind == "reflection":
        return build_named_matrix("backward_identity", n, config) @ build_named_matrix("circulant", n, config)
    if kind == "position":
        m = bk.zeros((n, n))
        m[idx, idx] = _position_diagonal(n, config)
        return m
    if kind == "derivative":
        circ = build_named_matrix("circulant", n, config)
        return circ - circ.T
    if kind == "momentum":
        return bk.cplx(0, -1) * build_named_matrix("derivative", n, config)

    x = build_named_matrix("position", n, config)
    d = build_named_matrix("derivative", n, config)
    lowering = (x + d) / bk.sqrt(bk.real(2))
    if kind == "lowering":
        return lowering
    if kind == "raising":
        return lowering.T.copy()
    if kind == "number":
        return lowering.T @ lowering
    return lowering @ lowering.T  # partner_number


def i_power(k: int, config: PrecisionConfig = BINARY64):
    """i**k, exact."""
    re, im = ((1, 0), (0, 1), (-1, 0), (0, -1))[k % 4]
    return config.backend.cplx(re, im)


def identity(n: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    return config.backend.eye(check_dim(n))


def basis_vector(n: int, k: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    n = check_dim(n)
    if not 0 <= k < n:
        raise IndexError(f"basis index {k} out of range for dimension {n}")
    v = config.backend.zeros(n)
    v[k] = config.backend.cplx(1)
    return v


def fourier_basis_vector(n: int, k: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """Discrete trigonometric vector n**-1/2 (1, q^k, q^2k, ...)^T, i.e. column k of the DFT."""
    n = check_dim(n)
    if not 0 <= k < n:
        raise IndexError(f"Fourier index {k} out of range for dimension {n}")
    bk = config.backend
    roots = unit_roots(n, config)
    return roots[(np.arange(n) * k) % n] / bk.sqrt(bk.real(n))


def parity_decompose(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split ``v`` into its reflection-symmetric and reflection-antisymmetric parts."""
    v = np.asarray(v)
    if v.ndim != 1 or v.shape[0] < MIN_DIM:
        raise DimensionError("parity_decompose expects a vector of length >= 2")
    reflected = v[reflection_indices(v.shape[0])]
    return (v + reflected) / 2, (v - reflected) / 2


# ---------------------------------------------------------------------------
# dense linear algebra


def _require_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")


def _require_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _require_same_shape(a, b)
    return a + b


def scale(alpha, a: np.ndarray) -> np.ndarray:
    return alpha * a


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _require_square(a)
    _require_same_shape(a, b)
    return a @ b


def apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    _require_square(m)
    if v.ndim != 1 or v.shape[0] != m.shape[0]:
        raise DimensionError(f"cannot apply {m.shape} matrix to vector of shape {v.shape}")
    return m @ v


def transpose(a: np.ndarray) -> np.ndarray:
    return a.T.copy()


def conjugate_transpose(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T.copy()


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return multiply(a, b) - multiply(b, a)


def inner_product(u: np.ndarray, v: np.ndarray):
    """(u, v) = sum conj(u_k) v_k; conjugates the first argument."""
    if u.ndim != 1:
        raise DimensionError("inner_product expects vectors")
    _require_same_shape(u, v)
    return np.sum(np.conj(u) * v)


def norm(v: np.ndarray):
    return sqrt_of(np.sum(np.conj(v) * v).real)


def frobenius_norm(a: np.ndarray):
    return norm(np.asarray(a).ravel())


def max_abs(a: np.ndarray):
    return max(abs(x) for x in np.asarray(a).ravel())
