"""Ladder construction of the eigenvectors of the 5-point number operator.

Start from the ground state (the kernel of the lowering operator), climb with the
raising operator evaluated through the sparse rules, and read each eigenvalue off
as ||A f_n||^2.  The same vectors are also produced by the power formula
``(A^T)^n f_0`` and by the Newtonian matrix polynomials ``P_n(X_5) f_0``; those
paths exist so that the three constructions can be checked against each other.

Sign convention: f_0 has a positive first component and every later vector is
``A^T f_{n-1}`` divided by its (positive) norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import build_named_matrix, fifth_root_constants, identity, norm
from .precision import BINARY64, PrecisionConfig
from .sparse import ParityClass, sparse_apply, split

LADDER_TOP = 4


class LadderTopError(ValueError):
    """Raised when stepping above f_4."""


@dataclass(frozen=True)
class EigenPair:
    n: int
    lam: float
    vector: np.ndarray
    dft_exponent: int
    parity: str


@dataclass(frozen=True)
class Spectrum5:
    """Closed-form eigenvalues indexed by n (not sorted)."""

    lambdas: tuple

    def __getitem__(self, n: int):
        return self.lambdas[n]

    def total(self):
        return sum(self.lambdas)


@dataclass(frozen=True)
class MixingData:
    eta: float
    phi: float
    g: tuple


@dataclass(frozen=True)
class NewtonLadder:
    nodes: tuple
    polynomials: tuple
    d: tuple


@dataclass(frozen=True)
class EigenSystem5:
    pairs: tuple
    spectrum: Spectrum5
    norm_factors: tuple

    @property
    def vectors(self) -> np.ndarray:
        """Eigenvectors as the rows of a 5x5 array."""
        return np.array([p.vector for p in self.pairs])

    @property
    def lambdas(self) -> tuple:
        return tuple(p.lam for p in self.pairs)


def _parity(n: int) -> str:
    return ParityClass(n).parity


def ground_state(config: PrecisionConfig = BINARY64) -> EigenPair:
    k = fifth_root_constants(config)
    raw = config.backend.array([k.xi0, k.xi1, 1, 1, k.xi1])
    return EigenPair(0, config.backend.real(0), raw / norm(raw), 0, "symmetric")


def closed_form_spectrum(config: PrecisionConfig = BINARY64) -> Spectrum5:
    k = fifth_root_constants(config)
    s1, s2 = k.s[1], k.s[2]
    c1, c2 = k.c[1], k.c[2]
    return Spectrum5((
        config.backend.real(0),
        (c1 * (s2 - 1) + 7) / 2,
        s1 * (s1 - c2) / 2,
        s1 * (s1 + c2) / 2,
        (7 - c1 * (1 + s2)) / 2,
    ))


def raise_pair(pair: EigenPair, config: PrecisionConfig = BINARY64) -> tuple[EigenPair, float]:
    """One ladder step f_n -> f_{n+1}; also returns ||A^T f_n||."""
    if pair.n >= LADDER_TOP:
        raise LadderTopError(f"f_{pair.n} is the top of the ladder")
    image = sparse_apply(pair.vector, pair.n, "raising", config)
    factor = norm(image)
    nxt = pair.n + 1
    vector = image / factor
    lowered = sparse_apply(vector, nxt, "lowering", config)
    lam = norm(lowered) ** 2
    return EigenPair(nxt, lam, vector, nxt % 4, _parity(nxt)), factor


@lru_cache(maxsize=None)
def _ladder_eigensystem(mode: str, digits: int) -> EigenSystem5:
    config = PrecisionConfig(mode, digits)
    pairs = [ground_state(config)]
    factors = []
    for _ in range(LADDER_TOP):
        nxt, factor = raise_pair(pairs[-1], config)
        pairs.append(nxt)
        factors.append(factor)
    return EigenSystem5(tuple(pairs), closed_form_spectrum(config), tuple(factors))


def ladder_eigensystem(config: PrecisionConfig = BINARY64) -> EigenSystem5:
    return _ladder_eigensystem(config.mode, config.digits)


def mixing_parameters(config: PrecisionConfig = BINARY64) -> tuple:
    """(eta, phi) from their defining closed forms."""
    bk = config.backend
    k = fifth_root_constants(config)
    eta = 4 / bk.sqrt(21 - 5 * k.c[2])
    phi = bk.atan(k.s[1] ** 2 / 4)
    return eta, phi


def power_formula(n: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """f_n = (eta * prod_{k<=n} sqrt(lambda_k))^-1 (A^T)^n f_0 with dense A^T."""
    if not 1 <= n <= LADDER_TOP:
        raise IndexError(f"power formula is defined for n = 1..4, got {n}")
    bk = config.backend
    raising = build_named_matrix("raising", 5, config)
    lam = closed_form_spectrum(config)
    eta, _ = mixing_parameters(config)
    v = ground_state(config).vector
    prefactor = eta
    for k in range(1, n + 1):
        v = raising @ v
        prefactor = prefactor * bk.sqrt(lam[k])
    return v / prefactor


def mixing(config: PrecisionConfig = BINARY64) -> MixingData:
    bk = config.backend
    eta, phi = mixing_parameters(config)
    f = [p.vector for p in ladder_eigensystem(config).pairs]
    sin_phi, cos_phi = bk.sin(phi), bk.cos(phi)
    g = (
        sin_phi * f[0] + cos_phi * f[4],
        cos_phi * f[0] - sin_phi * f[4],
        f[1], f[2], f[3],
    )
    return MixingData(eta, phi, g)


def recurrence_residuals(config: PrecisionConfig = BINARY64) -> dict:
    """Residual norms of the three-term (n=2,3), four-term (n=1) and A f_1 relations."""
    bk = config.backend
    k = fifth_root_constants(config)
    lam = closed_form_spectrum(config)
    eta, _ = mixing_parameters(config)
    f = [p.vector for p in ladder_eigensystem(config).pairs]
    x = build_named_matrix("position", 5, config)
    lowering = build_named_matrix("lowering", 5, config)
    r2 = [bk.sqrt(2 * v) for v in lam.lambdas]
    mixture = eta * (f[0] + (k.sqrt5 * k.c[2] / 4) * f[4])
    return {
        "three_term_n3": norm(r2[4] * f[4] + r2[3] * f[2] - 2 * (x @ f[3])),
        "three_term_n2": norm(r2[3] * f[3] + r2[2] * f[1] - 2 * (x @ f[2])),
        "four_term_n1": norm(r2[2] * f[2] + r2[1] * mixture - 2 * (x @ f[1])),
        "lowering_f1_mixture": norm(lowering @ f[1] - bk.sqrt(lam[1]) * mixture),
    }


def newton_nodes(config: PrecisionConfig = BINARY64) -> tuple:
    s2 = fifth_root_constants(config).s[2]
    b_sym = split("symmetric", config).sparse.to_dense(config)
    b_anti = split("antisymmetric", config).sparse.to_dense(config) / s2
    return (-b_sym, b_anti, b_sym, -b_anti)


@lru_cache(maxsize=None)
def _newton_ladder(mode: str, digits: int) -> NewtonLadder:
    config = PrecisionConfig(mode, digits)
    bk = config.backend
    nodes = newton_nodes(config)
    x = build_named_matrix("position", 5, config)
    lam = closed_form_spectrum(config)
    eta, _ = mixing_parameters(config)
    polys = [identity(5, config)]
    d = [bk.real(1)]
    for n in range(1, LADDER_TOP + 1):
        polys.append((x - nodes[n - 1]) @ polys[-1])
        d.append((eta if n == 1 else d[-1]) * bk.sqrt(2 * lam[n]))
    return NewtonLadder(nodes, tuple(polys), tuple(d))


def newton_ladder(config: PrecisionConfig = BINARY64) -> NewtonLadder:
    return _newton_ladder(config.mode, config.digits)


def newton_vector(n: int, config: PrecisionConfig = BINARY64) -> np.ndarray:
    """d_n^-1 P_n(X_5) f_0."""
    if not 0 <= n <= LADDER_TOP:
        raise IndexError(f"Newtonian representation is defined for n = 0..4, got {n}")
    ladder = newton_ladder(config)
    return ladder.polynomials[n] @ ground_state(config).vector / ladder.d[n]
