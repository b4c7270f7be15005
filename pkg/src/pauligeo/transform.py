"""Eigenphase <-> Pauli-coefficient conversion for diagonal Hamiltonians.

A diagonal Hermitian operator on n qubits is stored either as its N = 2**n
eigenphases ``h`` (the diagonal) or as its coefficients ``c`` over the
{I, Z}**n Pauli strings. String ``m`` is identified with an n-bit mask: bit i
set means factor i is Z. The two are related by

    c[m] = (1/N) * sum_k h[k] * (-1)**popcount(k & m)

which is a scaled Walsh-Hadamard transform.
"""

import numpy as np

from .errors import BadDimension, NonUnitModulus

TWO_PI = 2.0 * np.pi


def pauli_weight(mask: int) -> int:
    """Number of Z factors in the string identified by ``mask``."""
    if mask < 0:
        raise ValueError(f"mask must be non-negative, got {mask}")
    return int(mask).bit_count()


def pauli_weights(n: int) -> np.ndarray:
    """Pauli weight of every mask ``0 .. 2**n - 1``."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)


def num_qubits(values) -> int:
    """Return n for a length-2**n vector, raising BadDimension otherwise."""
    size = len(values)
    if size < 2 or size & (size - 1):
        raise BadDimension(f"vector length must be 2**n with n >= 1, got {size}")
    return size.bit_length() - 1


def walsh_matrix(n: int) -> np.ndarray:
    """Dense +-1 Hadamard matrix with entries (-1)**popcount(i & j)."""
    k = np.arange(1 << n, dtype=np.uint64)
    parity = np.bitwise_count(k[:, None] & k[None, :]) & 1
    return 1.0 - 2.0 * parity


def fwht(x) -> np.ndarray:
    """Unnormalised fast Walsh-Hadamard transform along the last axis.

    Butterflies run on a float copy; the input is left untouched.
    """
    a = np.array(x, dtype=np.float64)
    size = a.shape[-1]
    num_qubits(np.empty(size))
    lead = a.shape[:-1]
    h = 1
    while h < size:
        v = a.reshape(*lead, size // (2 * h), 2, h)
        top = v[..., 0, :].copy()
        bottom = v[..., 1, :]
        v[..., 0, :] += bottom
        bottom *= -1.0
        bottom += top
        h *= 2
    return a


def expand(phases) -> np.ndarray:
    """Pauli coefficients of ``diag(phases)``."""
    h = np.asarray(phases, dtype=np.float64)
    return fwht(h) / h.shape[-1]


def unexpand(coeffs) -> np.ndarray:
    """Diagonal of the Hamiltonian with Pauli coefficients ``coeffs``.

    The result is not reduced modulo 2*pi.
    """
    return fwht(coeffs)


def canonicalize(phases) -> np.ndarray:
    """Reduce phases into [0, 2*pi)."""
    h = np.mod(np.asarray(phases, dtype=np.float64), TWO_PI)
    # np.mod can round a tiny negative up to exactly 2*pi
    h[h >= TWO_PI] = 0.0
    return h


def eigenphases_from_unitary(diag_entries, tol: float = 1e-9) -> np.ndarray:
    """Phases h in [0, 2*pi) with exp(-1j*h) equal to the given diagonal."""
    z = np.asarray(diag_entries, dtype=np.complex128)
    num_qubits(z)
    bad = np.flatnonzero(np.abs(np.abs(z) - 1.0) > tol)
    if bad.size:
        k = int(bad[0])
        raise NonUnitModulus(
            f"diagonal entry {k} has modulus {abs(z[k])!r}, expected 1 within {tol}"
        )
    return canonicalize(-np.angle(z))
