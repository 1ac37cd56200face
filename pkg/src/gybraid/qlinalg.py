"""Dense complex linear algebra on qubit registers.

Operators are plain ``numpy`` complex arrays.  Basis states are ordered
lexicographically over bit strings with qubit 1 as the most significant
bit, so ``|abc>`` has index ``4a + 2b + c``.
"""
from __future__ import annotations

import hashlib
import math

import numpy as np

TOL_EQ = 1e-9
TOL_UNITARY = 1e-10
KEY_GRID = 1e-6


class PlacementError(ValueError):
    """A local operator does not fit at the requested qubit position."""


class DimensionError(ValueError):
    pass


def identity(num_qubits: int) -> np.ndarray:
    return np.eye(2 ** num_qubits, dtype=complex)


def _log2_dim(dim: int) -> int:
    q = dim.bit_length() - 1
    if dim < 1 or 2 ** q != dim:
        raise DimensionError(f"dimension {dim} is not a power of 2")
    return q


def num_qubits_of(op: np.ndarray) -> int:
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {op.shape}")
    return _log2_dim(op.shape[0])


def basis_state(label: str) -> np.ndarray:
    """Computational basis vector for a bit string such as ``"0110"``."""
    if not label or set(label) - {"0", "1"}:
        raise ValueError(f"bad basis label {label!r}")
    vec = np.zeros(2 ** len(label), dtype=complex)
    vec[int(label, 2)] = 1.0
    return vec


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # left factor holds the most significant qubits
    return np.kron(a, b)


def _check_placement(k: int, start: int, total: int) -> None:
    if start < 1 or start + k - 1 > total:
        raise PlacementError(
            f"{k}-qubit operator cannot start at qubit {start} of {total}")


def embed_local(op: np.ndarray, start: int, total: int) -> np.ndarray:
    """Return ``I^(start-1) (x) op (x) I^(rest)`` on ``total`` qubits.

    ``start`` is 1-based.
    """
    k = num_qubits_of(op)
    _check_placement(k, start, total)
    left = np.eye(2 ** (start - 1), dtype=complex)
    right = np.eye(2 ** (total - start - k + 1), dtype=complex)
    return kron(kron(left, op), right)


def apply_local(op: np.ndarray, start: int, target: np.ndarray) -> np.ndarray:
    """Multiply ``target`` on the left by ``op`` placed at qubit ``start``.

    ``target`` is a state vector of length ``2**q`` or a matrix whose rows
    are indexed by the ``q``-qubit basis.  The full Kronecker product is
    never formed.
    """
    k = num_qubits_of(op)
    dim = target.shape[0]
    total = _log2_dim(dim)
    _check_placement(k, start, total)
    lead = 2 ** (start - 1)
    trail = dim // (lead * 2 ** k)
    shaped = target.reshape(lead, 2 ** k, trail, -1)
    out = np.einsum("ij,ajbc->aibc", op, shaped, optimize=True)
    return out.reshape(target.shape)


def _same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def matpow(a: np.ndarray, k: int) -> np.ndarray:
    """``a**k`` by repeated squaring; ``k`` must be nonnegative."""
    if k < 0:
        raise ValueError("matpow needs a nonnegative exponent")
    if a.shape[0] != a.shape[1]:
        raise DimensionError("matpow needs a square matrix")
    result = np.eye(a.shape[0], dtype=complex)
    base = np.asarray(a, dtype=complex)
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def max_entry_distance(a: np.ndarray, b: np.ndarray) -> float:
    _same_shape(a, b)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def approx_eq(a: np.ndarray, b: np.ndarray, tol: float = TOL_EQ) -> bool:
    return max_entry_distance(a, b) < tol


def unitarity_defect(a: np.ndarray) -> float:
    return max_entry_distance(a @ dagger(a), np.eye(a.shape[0]))


def is_unitary(a: np.ndarray, tol: float = TOL_UNITARY) -> bool:
    return unitarity_defect(a) < tol


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _rounded(a: np.ndarray, grid: float) -> np.ndarray:
    # + 0 turns -0.0 into 0.0 before the integer cast
    re = np.rint(a.real / grid) + 0
    im = np.rint(a.imag / grid) + 0
    return np.stack([re, im], axis=-1).astype(np.int64)


def canonical_key(a: np.ndarray, grid: float = KEY_GRID) -> bytes:
    """Fingerprint of ``a`` after rounding every entry to ``grid``.

    Returns a 16-byte digest of the rounded integer entries, so equal
    matrices give equal keys and matrices that differ by at least ``grid``
    in some entry give different keys.
    """
    if grid <= 0:
        raise ValueError("grid must be positive")
    r = _rounded(np.asarray(a), grid)
    return hashlib.blake2b(r.tobytes(), digest_size=16).digest()


def canonical_keys(stack: np.ndarray, grid: float = KEY_GRID) -> list[bytes]:
    """``canonical_key`` for every matrix in a ``(count, d, d)`` stack."""
    r = _rounded(stack, grid)
    return [hashlib.blake2b(row.tobytes(), digest_size=16).digest() for row in r]


def _fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("non-finite matrix entry")
    return format(x + 0.0, ".17g")


def export_matrix(a: np.ndarray) -> str:
    """Text form ``{"dim": d, "entries": [[re, im], ...]}`` (row-major)."""
    entries = ", ".join(f"[{_fmt(z.real)}, {_fmt(z.imag)}]" for z in np.ravel(a))
    return f'{{"dim": {a.shape[0]}, "entries": [{entries}]}}'


def import_matrix(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    flat = np.array([complex(re, im) for re, im in obj["entries"]])
    return flat.reshape(dim, dim)
