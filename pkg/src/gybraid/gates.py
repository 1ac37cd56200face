"""Named qubit gates, Pauli words and the generalized Yang-Baxter matrix R.

Qubits are numbered from 1.  A braid group on ``n`` strands acts on
``n + 1`` qubits; ``NOT_i`` (2 <= i <= n) acts on qubits ``i-1, i, i+1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .qlinalg import embed_local, identity, kron
from .qlinalg import max_entry_distance as dist
from .reports import CheckReport, stopwatch

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I2 = np.eye(2, dtype=complex)
_PHASES = (1, 1j, -1, -1j)


class ParameterError(ValueError):
    """Invalid (n, m) or gate index."""


class NotAnInvolutionError(ValueError):
    pass


def check_m(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or m < 3 or m % 2 == 0:
        raise ParameterError(f"m must be an odd integer >= 3, got {m!r}")


def check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"n must be an integer >= 2, got {n!r}")


def nu_for(m: int) -> int:
    check_m(m)
    return -1 if m == 3 else 1


@dataclass(frozen=True)
class GateParams:
    n: int
    m: int

    def __post_init__(self):
        check_n(self.n)
        check_m(self.m)

    @property
    def nu(self) -> int:
        return nu_for(self.m)

    @property
    def qubits(self) -> int:
        return self.n + 1


# --------------------------------------------------------------------------
# Pauli words


@dataclass(frozen=True)
class PauliWord:
    """``i**phase * prod_q X_q**x[q] Z_q**z[q]``, with X before Z on each qubit.

    ``x`` and ``z`` are tuples of bits, one per qubit.  ``phase`` is taken
    mod 4, so the scalar is one of +1, +i, -1, -i.
    """

    x: tuple[int, ...]
    z: tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        if len(self.x) != len(self.z):
            raise ValueError("x and z parts must have the same length")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, q: int) -> PauliWord:
        return cls((0,) * q, (0,) * q)

    @classmethod
    def from_label(cls, label: str, phase: int = 0) -> PauliWord:
        """Build from a per-qubit string over ``I``, ``X``, ``Z``; e.g. ``"ZXZI"``."""
        x, z = [], []
        for ch in label:
            if ch not in "IXZ":
                raise ValueError(f"unknown Pauli symbol {ch!r}")
            x.append(int(ch == "X"))
            z.append(int(ch == "Z"))
        return cls(tuple(x), tuple(z), phase)

    @classmethod
    def single(cls, symbol: str, i: int, q: int) -> PauliWord:
        if not 1 <= i <= q:
            raise ParameterError(f"qubit {i} out of range 1..{q}")
        label = ["I"] * q
        label[i - 1] = symbol
        return cls.from_label("".join(label))

    @property
    def qubit_count(self) -> int:
        return len(self.x)

    @property
    def scalar(self) -> complex:
        return _PHASES[self.phase]

    @property
    def factors(self) -> tuple[str, ...]:
        names = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "XZ"}
        return tuple(names[xz] for xz in zip(self.x, self.z))

    def __mul__(self, other: PauliWord) -> PauliWord:
        if self.qubit_count != other.qubit_count:
            raise ValueError("Pauli words on different qubit counts")
        # Z^a X^b = (-1)^(ab) X^b Z^a when moving the left Z past the right X
        swaps = sum(za & xb for za, xb in zip(self.z, other.x))
        x = tuple(a ^ b for a, b in zip(self.x, other.x))
        z = tuple(a ^ b for a, b in zip(self.z, other.z))
        return PauliWord(x, z, self.phase + other.phase + 2 * swaps)

    def __neg__(self) -> PauliWord:
        return PauliWord(self.x, self.z, self.phase + 2)

    def square(self) -> PauliWord:
        return self * self

    def is_identity(self) -> bool:
        return self.phase == 0 and not any(self.x) and not any(self.z)

    def is_involution(self) -> bool:
        """True when the word squares to +identity."""
        return self.square().is_identity()

    def commutes_with(self, other: PauliWord) -> bool:
        sym = sum(a & d for a, d in zip(self.x, other.z))
        sym += sum(b & c for b, c in zip(self.z, other.x))
        return sym % 2 == 0

    def matrix(self) -> np.ndarray:
        out = np.array([[self.scalar]], dtype=complex)
        for xb, zb in zip(self.x, self.z):
            f = _I2
            if xb:
                f = _X
            if zb:
                f = f @ _Z
            out = kron(out, f)
        return out

    def __str__(self) -> str:
        sign = {0: "+", 1: "+i", 2: "-", 3: "-i"}[self.phase]
        body = " ".join(f"{f}{q}" for q, f in enumerate(self.factors, 1) if f != "I")
        return f"{sign}{body or 'I'}"


# --------------------------------------------------------------------------
# standard gates


def pauli_x(i: int, q: int) -> np.ndarray:
    if not 1 <= i <= q:
        raise ParameterError(f"qubit {i} out of range 1..{q}")
    return embed_local(_X, i, q)


def pauli_z(i: int, q: int) -> np.ndarray:
    if not 1 <= i <= q:
        raise ParameterError(f"qubit {i} out of range 1..{q}")
    return embed_local(_Z, i, q)


@lru_cache(maxsize=None)
def _xor_not() -> np.ndarray:
    op = np.zeros((8, 8), dtype=complex)
    for idx in range(8):
        a, c = idx >> 2, idx & 1
        out = idx ^ 0b010 if a != c else idx
        op[out, idx] = 1
    op.setflags(write=False)
    return op


def xor_controlled_not() -> np.ndarray:
    """3-qubit gate flipping the middle qubit iff the outer two disagree."""
    return _xor_not().copy()


def not_i(i: int, n: int) -> np.ndarray:
    """``NOT_i`` on the ``n + 1`` qubits of the ``n``-strand representation."""
    check_n(n)
    if not 2 <= i <= n:
        raise ParameterError(f"NOT_i needs 2 <= i <= n={n}, got i={i}")
    return embed_local(_xor_not(), i - 1, n + 1)


def exp_involution(p: PauliWord, theta: float) -> np.ndarray:
    """``exp(i theta P) = cos(theta) I + i sin(theta) P`` for ``P**2 = I``."""
    if not p.is_involution():
        raise NotAnInvolutionError(f"{p} does not square to +I")
    return math.cos(theta) * identity(p.qubit_count) + 1j * math.sin(theta) * p.matrix()


# --------------------------------------------------------------------------
# the R matrix


def build_r_direct(m: int) -> np.ndarray:
    """R assembled entry by entry as a block sum of two 4x4 blocks."""
    nu = nu_for(m)
    c = math.cos(math.pi / m)
    s = math.sin(math.pi / m)
    upper = np.array([
        [nu * c, 0, 1j * s, 0],
        [0, -1j * s, 0, c],
        [1j * s, 0, nu * c, 0],
        [0, c, 0, -1j * s],
    ], dtype=complex)
    lower = np.array([
        [-1j * s, 0, c, 0],
        [0, nu * c, 0, 1j * s],
        [c, 0, -1j * s, 0],
        [0, 1j * s, 0, nu * c],
    ], dtype=complex)
    r = np.zeros((8, 8), dtype=complex)
    r[:4, :4] = upper
    r[4:, 4:] = lower
    return r


def build_r_decomposed(m: int) -> np.ndarray:
    """R as an exponential of a Pauli word times the XOR-controlled NOT."""
    check_m(m)
    if m == 3:
        rot = exp_involution(PauliWord.from_label("IXI"), 2 * math.pi / 3)
        return rot @ PauliWord.from_label("ZIZ").matrix() @ _xor_not()
    rot = exp_involution(PauliWord.from_label("ZXZ"), math.pi / m)
    return rot @ _xor_not()


# --------------------------------------------------------------------------
# H_i and S_{k,l}


def h_generator(i: int, params: GateParams) -> PauliWord:
    """``X_i`` for m = 3, ``Z_{i-1} X_i Z_{i+1}`` for m >= 5 (2 <= i <= n)."""
    n, q = params.n, params.qubits
    if not 2 <= i <= n:
        raise ParameterError(f"H_i needs 2 <= i <= n={n}, got i={i}")
    if params.m == 3:
        return PauliWord.single("X", i, q)
    return (PauliWord.single("Z", i - 1, q) * PauliWord.single("X", i, q)
            * PauliWord.single("Z", i + 1, q))


def s_kl(k: int, l: int, params: GateParams) -> PauliWord:
    """Ordered product ``H_k H_{k+1} ... H_l`` with exact phase."""
    if not 2 <= k <= l <= params.n:
        raise ParameterError(f"S_kl needs 2 <= k <= l <= {params.n}, got ({k}, {l})")
    word = PauliWord.identity(params.qubits)
    for i in range(k, l + 1):
        word = word * h_generator(i, params)
    return word


# --------------------------------------------------------------------------
# commutation and NOT identities as matrix checks


def comm_identities_check(n: int, tol: float = 1e-12):
    """Verify every clause of the Pauli / NOT_i commutation relations.

    Runs over all valid indices on the ``n + 1`` qubits and records one
    residual per identity instance.
    """
    clock = stopwatch()
    q = n + 1
    X = {i: pauli_x(i, q) for i in range(1, q + 1)}
    Z = {i: pauli_z(i, q) for i in range(1, q + 1)}
    NOT = {i: not_i(i, n) for i in range(2, n + 1)}
    zero = np.zeros_like(X[1])
    out = []
    for i in X:
        for j in X:
            out.append((f"1:[X{i},X{j}]", dist(X[i] @ X[j] - X[j] @ X[i], zero)))
            out.append((f"2:[Z{i},Z{j}]", dist(Z[i] @ Z[j] - Z[j] @ Z[i], zero)))
            if i == j:
                out.append((f"3:X{i}Z{i}=-Z{i}X{i}", dist(X[i] @ Z[i], -Z[i] @ X[i])))
            else:
                out.append((f"3:[X{i},Z{j}]", dist(X[i] @ Z[j] - Z[j] @ X[i], zero)))
    for i in NOT:
        lhs = Z[i] @ NOT[i]
        rhs = Z[i - 1] @ Z[i + 1] @ NOT[i] @ Z[i]
        out.append((f"4:Z{i}NOT{i}", dist(lhs, rhs)))
        for j in Z:
            if j != i:
                out.append((f"4:[Z{j},NOT{i}]", dist(Z[j] @ NOT[i] - NOT[i] @ Z[j], zero)))
        out.append((f"5:NOT{i}X{i-1}", dist(NOT[i] @ X[i - 1], X[i - 1] @ X[i] @ NOT[i])))
        out.append((f"5:NOT{i}X{i+1}", dist(NOT[i] @ X[i + 1], X[i] @ X[i + 1] @ NOT[i])))
        for j in X:
            if j not in (i - 1, i + 1):
                out.append((f"5:[NOT{i},X{j}]", dist(NOT[i] @ X[j] - X[j] @ NOT[i], zero)))
    report = CheckReport.from_residuals("comm_identities", n, None, out, tol)
    report.elapsed_ms = clock()
    return report


def not_identities_check(n: int, tol: float = 1e-12):
    """``NOT_i**2 = Id`` and ``NOT_i NOT_{i+1} NOT_i = NOT_{i+1} NOT_i NOT_{i+1}``."""
    clock = stopwatch()
    NOT = {i: not_i(i, n) for i in range(2, n + 1)}
    eye = identity(n + 1)
    out = [(f"NOT{i}^2", dist(NOT[i] @ NOT[i], eye)) for i in NOT]
    for i in range(2, n):
        a, b = NOT[i], NOT[i + 1]
        out.append((f"NOT{i}NOT{i+1}NOT{i}", dist(a @ b @ a, b @ a @ b)))
    report = CheckReport.from_residuals("not_identities", n, None, out, tol)
    report.elapsed_ms = clock()
    return report
