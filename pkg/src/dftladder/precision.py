"""Numeric backends: binary64 (numpy complex128) and extended (mpmath objects).

Every constructor in the package takes a :class:`PrecisionConfig`; the config
hands out a backend that knows how to build scalars and arrays in its number
system.  Extended mode uses a private ``mpmath.MPContext`` so that the working
precision is never read from or written to mpmath's global context.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any

import mpmath
import numpy as np

BINARY64_EPSILON = 1e-12
MIN_EXTENDED_DIGITS = 30


@dataclass(frozen=True)
class PrecisionConfig:
    mode: str = "binary64"
    digits: int = 0
    epsilon: float = field(default=0.0)

    def __post_init__(self):
        if self.mode not in ("binary64", "extended"):
            raise ValueError(f"unknown precision mode {self.mode!r}")
        if self.mode == "extended" and self.digits < MIN_EXTENDED_DIGITS:
            raise ValueError(f"extended precision needs at least {MIN_EXTENDED_DIGITS} digits")
        if self.mode == "binary64" and self.digits:
            raise ValueError("digits only apply to extended mode")
        if self.epsilon == 0.0:
            object.__setattr__(self, "epsilon", self.default_epsilon())
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")

    def default_epsilon(self) -> float:
        if self.mode == "binary64":
            return BINARY64_EPSILON
        # keep the binary64 headroom ratio (~1e4 above unit roundoff)
        return 10.0 ** -(self.digits - 4)

    @classmethod
    def parse(cls, text: str, epsilon: float | None = None) -> "PrecisionConfig":
        """Parse ``"64"`` / ``"binary64"`` or ``"extended:<digits>"``."""
        text = text.strip().lower()
        eps = 0.0 if epsilon is None else epsilon
        if text in ("64", "binary64"):
            return cls("binary64", 0, eps)
        if text.startswith("extended:"):
            try:
                digits = int(text.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad digit count in {text!r}") from None
            return cls("extended", digits, eps)
        raise ValueError(f"unrecognised precision {text!r}")

    def with_epsilon(self, epsilon: float) -> "PrecisionConfig":
        return PrecisionConfig(self.mode, self.digits, epsilon)

    @property
    def label(self) -> str:
        return "binary64" if self.mode == "binary64" else f"extended:{self.digits}"

    @property
    def backend(self) -> "Backend":
        return _backend_for(self.mode, self.digits)


BINARY64 = PrecisionConfig()


class Backend:
    """binary64 arithmetic on complex128 arrays."""

    dtype: Any = np.complex128
    extended = False

    @cached_property
    def pi(self):
        return math.pi

    def real(self, x):
        return float(x)

    def cplx(self, re, im=0.0):
        return complex(re, im)

    def sqrt(self, x):
        return math.sqrt(x)

    def sin(self, x):
        return math.sin(x)

    def cos(self, x):
        return math.cos(x)

    def atan(self, x):
        return math.atan(x)

    def exp_i(self, x):
        return cmath.exp(1j * x)

    def array(self, data) -> np.ndarray:
        return np.asarray(data, dtype=np.complex128)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.complex128)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.complex128)

    def real_array(self, data) -> np.ndarray:
        return np.asarray(data, dtype=np.float64)


class ExtendedBackend(Backend):
    """mpmath arithmetic with a private context, arrays of dtype=object."""

    dtype = object
    extended = True

    def __init__(self, digits: int):
        self.ctx = mpmath.MPContext()
        self.ctx.dps = digits
        self._to_mpc = np.frompyfunc(self.ctx.mpc, 1, 1)
        self._to_mpf = np.frompyfunc(self.ctx.mpf, 1, 1)

    @cached_property
    def pi(self):
        return +self.ctx.pi

    def real(self, x):
        return self.ctx.mpf(x)

    def cplx(self, re, im=0):
        return self.ctx.mpc(re, im)

    def sqrt(self, x):
        return self.ctx.sqrt(x)

    def sin(self, x):
        return self.ctx.sin(x)

    def cos(self, x):
        return self.ctx.cos(x)

    def atan(self, x):
        return self.ctx.atan(x)

    def exp_i(self, x):
        return self.ctx.expj(x)

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        if arr.ndim == 0:
            return np.asarray(self.ctx.mpc(arr.item()), dtype=object)
        return self._to_mpc(arr).astype(object)

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape))

    def eye(self, n: int) -> np.ndarray:
        return self.array(np.eye(n))

    def real_array(self, data) -> np.ndarray:
        return self._to_mpf(np.asarray(data, dtype=object)).astype(object)


@lru_cache(maxsize=None)
def _backend_for(mode: str, digits: int) -> Backend:
    # backends hold no mutable state after construction
    return Backend() if mode == "binary64" else ExtendedBackend(digits)


def sqrt_of(x):
    """Square root that follows the number system of ``x``."""
    ctx = getattr(x, "context", None)
    if ctx is not None:
        return ctx.sqrt(x)
    return math.sqrt(x)


def to_float(x) -> float:
    return float(getattr(x, "real", x))
