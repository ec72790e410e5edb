"""Annihilator-plus-sparse splittings of Phi_5 X_5 and the sparse ladder rules.

``Phi_5 X_5`` can be written either as ``A_s / s_2 + i B_s`` where ``A_s`` kills
every reflection-symmetric vector, or as ``(A_a + B_a) / s_2`` where ``A_a`` kills
every reflection-antisymmetric vector.  ``B_s`` has 8 nonzero entries and ``B_a``
has 10.  On a DFT eigenvector with eigenvalue i^k the derivative term of the
ladder operators collapses to ``i^(1-k) Phi_5 X_5 f``, and the annihilator drops
out, leaving only the diagonal position operator and a sparse matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .core import build_named_matrix, i_power, dft_matrix, fifth_root_constants, norm, reflection_indices
from .precision import BINARY64, PrecisionConfig

Variant = Literal["symmetric", "antisymmetric"]
Which = Literal["lowering", "raising"]

EIGENSPACE_TOL = 1e-10


class EigenspaceError(ValueError):
    """Vector is not in the DFT eigenspace / parity class a sparse rule assumes."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class SparseMatrix:
    """Coordinate-list matrix; ``entries`` holds (row, col, value) with distinct positions."""

    dim: int
    entries: tuple

    def __post_init__(self):
        seen = set()
        for row, col, value in self.entries:
            if not (0 <= row < self.dim and 0 <= col < self.dim):
                raise IndexError(f"entry ({row}, {col}) outside a {self.dim}x{self.dim} matrix")
            if (row, col) in seen:
                raise ValueError(f"duplicate entry at ({row}, {col})")
            if value == 0:
                raise ValueError(f"explicit zero stored at ({row}, {col})")
            seen.add((row, col))

    @classmethod
    def from_dense(cls, m: np.ndarray) -> "SparseMatrix":
        rows, cols = np.nonzero(np.asarray(m != 0, dtype=bool))
        return cls(m.shape[0], tuple((int(r), int(c), m[r, c]) for r, c in zip(rows, cols)))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self, config: PrecisionConfig = BINARY64) -> np.ndarray:
        m = config.backend.zeros((self.dim, self.dim))
        for row, col, value in self.entries:
            m[row, col] = value
        return m

    def apply(self, v: np.ndarray) -> np.ndarray:
        out = v * 0 if v.dtype == object else np.zeros(v.shape, dtype=np.result_type(v.dtype, complex))
        for row, col, value in self.entries:
            out[row] += value * v[col]
        return out


@dataclass(frozen=True)
class SplitPair:
    variant: Variant
    annihilator: np.ndarray
    sparse: SparseMatrix


@dataclass(frozen=True)
class ParityClass:
    """DFT eigenvalue exponent k (Phi f = i^k f) taken mod 4; parity follows k mod 2."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    @property
    def parity(self) -> Variant:
        return "symmetric" if self.k % 2 == 0 else "antisymmetric"


def phi_x_product(config: PrecisionConfig = BINARY64) -> np.ndarray:
    return dft_matrix(5, config) @ build_named_matrix("position", 5, config)


@lru_cache(maxsize=None)
def _split(variant: str, mode: str, digits: int) -> SplitPair:
    config = PrecisionConfig(mode, digits)
    bk = config.backend
    k = fifth_root_constants(config)
    c1, c2 = k.c[1], k.c[2]
    # q^3 = conj(q^2) and q^4 = conj(q) keep the conjugate symmetry exact
    q = k.q
    q3 = bk.cplx(k.c[2] / 2, -k.s[2] / 2)
    q4 = q.conjugate()
    if variant == "symmetric":
        annihilator = bk.array([
            [0, 1, c1, -c1, -1],
            [0, q4, c1 * q3, -c1 * q3, -q4],
            [0, q3, c1 * q, -c1 * q, -q3],
            [0, q3, c1 * q, -c1 * q, -q3],
            [0, q4, c1 * q3, -c1 * q3, -q4],
        ])
        entries = ((1, 1, -c2), (1, 2, c1), (2, 1, 1), (2, 2, -1),
                   (3, 3, 1), (3, 4, -1), (4, 3, -c1), (4, 4, c2))
    elif variant == "antisymmetric":
        annihilator = bk.array([
            [0, -1, -c1, -c1, -1],
            [0, -q4, -c1 * q3, -c1 * q3, -q4],
            [0, -q3, -c1 * q, -c1 * q, -q3],
            [0, q3, c1 * q, c1 * q, q3],
            [0, q4, c1 * q3, c1 * q3, q4],
        ])
        entries = ((0, 1, 2), (0, 2, 2 * c1), (1, 1, c1), (1, 2, -1), (2, 1, c2), (2, 2, c1**2),
                   (3, 3, -c1**2), (3, 4, -c2), (4, 3, 1), (4, 4, -c1))
    else:
        raise ValueError(f"unknown split variant {variant!r}")
    entries = tuple((r, c, bk.cplx(v)) for r, c, v in entries)
    return SplitPair(variant, annihilator, SparseMatrix(5, entries))


def split(variant: Variant, config: PrecisionConfig = BINARY64) -> SplitPair:
    """Closed-form annihilator/sparse pair for the given parity class."""
    return _split(variant, config.mode, config.digits)


def reassemble(pair: SplitPair, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """Rebuild Phi_5 X_5 from a split pair."""
    bk = config.backend
    s2 = fifth_root_constants(config).s[2]
    sparse = pair.sparse.to_dense(config)
    if pair.variant == "symmetric":
        return pair.annihilator / s2 + bk.cplx(0, 1) * sparse
    return (pair.annihilator + sparse) / s2


# Sign and scale of the sparse term for each (k, which):
# result = 2^{-1/2} (X f + sign * scale * B f), scale = 1 for symmetric, 1/s2 for antisymmetric.
_RULE_SIGNS = {
    (0, "raising"): +1, (0, "lowering"): -1,
    (1, "raising"): -1, (1, "lowering"): +1,
    (2, "raising"): -1, (2, "lowering"): +1,
    (3, "raising"): +1, (3, "lowering"): -1,
}


def check_eigenspace(f: np.ndarray, cls: ParityClass, config: PrecisionConfig = BINARY64,
                     tol: float = EIGENSPACE_TOL) -> None:
    scale = norm(f)
    if scale == 0:
        raise EigenspaceError("zero vector has no parity class", 0.0)
    phase = i_power(cls.k, config)
    dft_res = float(norm(dft_matrix(5, config) @ f - phase * f) / scale)
    if dft_res > tol:
        raise EigenspaceError(f"vector is not a DFT eigenvector with eigenvalue i^{cls.k}", dft_res)
    sign = 1 if cls.parity == "symmetric" else -1
    par_res = float(norm(f[reflection_indices(5)] - sign * f) / scale)
    if par_res > tol:
        raise EigenspaceError(f"vector is not reflection-{cls.parity}", par_res)


def sparse_apply(f: np.ndarray, cls: ParityClass | int, which: Which,
                 config: PrecisionConfig = BINARY64, check: bool = True) -> np.ndarray:
    """Apply the lowering or raising operator to a DFT eigenvector using only X_5 and B.

    ``check`` verifies the eigenspace/parity precondition (tolerance 1e-10 relative);
    the sparse rule gives wrong answers on vectors outside that class.
    """
    if not isinstance(cls, ParityClass):
        cls = ParityClass(cls)
    if which not in ("lowering", "raising"):
        raise ValueError(f"which must be 'lowering' or 'raising', got {which!r}")
    if f.shape != (5,):
        raise ValueError("sparse rules are defined for 5-component vectors only")
    if check:
        check_eigenspace(f, cls, config)
    bk = config.backend
    k = fifth_root_constants(config)
    pair = split(cls.parity, config)
    sparse_part = pair.sparse.apply(f)
    if cls.parity == "antisymmetric":
        sparse_part = sparse_part / k.s[2]
    x_part = bk.array(k.s) * f
    return (x_part + _RULE_SIGNS[cls.k, which] * sparse_part) / bk.sqrt(bk.real(2))
