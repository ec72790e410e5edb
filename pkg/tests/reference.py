"""Dense reference operators built directly from their definitions with plain numpy.

Nothing here imports the package, so tests comparing against these matrices and
``numpy.linalg.eigh`` are independent of the code under test.
"""

import numpy as np


def dft(n):
    q = np.exp(2j * np.pi / n)
    k = np.arange(n)
    return q ** np.outer(k, k) / np.sqrt(n)


def position(n):
    return np.diag(2 * np.sin(2 * np.pi * np.arange(n) / n)).astype(complex)


def circulant(n):
    return np.roll(np.eye(n), 1, axis=1).astype(complex)


def reflection(n):
    p = np.zeros((n, n), dtype=complex)
    for k in range(n):
        p[k, (-k) % n] = 1
    return p


def derivative(n):
    c = circulant(n)
    return c - c.T


def lowering(n):
    return (position(n) + derivative(n)) / np.sqrt(2)


def number(n):
    a = lowering(n)
    return a.T @ a


def partner_number(n):
    a = lowering(n)
    return a @ a.T


def sorted_spectrum(m):
    return np.linalg.eigvalsh(m)


def phase_distance(a, b):
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if overlap != 0 else 1
    return np.linalg.norm(a - phase * b)
