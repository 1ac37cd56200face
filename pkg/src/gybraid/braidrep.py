"""Braid words and the qubit representation rho_R of B_n.

Generator ``sigma_i`` (1 <= i <= n-1) acts by R on qubits ``i, i+1, i+2``
of an ``n + 1`` qubit register.  Words are evaluated left to right: the
word ``[a, b]`` maps to ``rho(a) @ rho(b)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gates import GateParams, ParameterError, build_r_direct, check_m, check_n
from .qlinalg import (KEY_GRID, TOL_EQ, TOL_UNITARY, dagger, embed_local, identity,
                      kron, max_entry_distance)
from .reports import CheckReport, stopwatch


@dataclass(frozen=True)
class RepContext:
    """Strand count ``n``, odd ``m`` and the numerical tolerances in use."""

    n: int
    m: int
    tol_eq: float = TOL_EQ
    tol_unitary: float = TOL_UNITARY
    grid: float = KEY_GRID

    def __post_init__(self):
        check_n(self.n)
        check_m(self.m)
        if min(self.tol_eq, self.tol_unitary, self.grid) <= 0:
            raise ParameterError("tolerances must be positive")

    @property
    def params(self) -> GateParams:
        return GateParams(self.n, self.m)

    @property
    def nu(self) -> int:
        return self.params.nu

    @property
    def qubits(self) -> int:
        return self.n + 1

    @property
    def dim(self) -> int:
        return 2 ** (self.n + 1)


@dataclass(frozen=True)
class BraidWord:
    """Element of B_n as a sequence of signed generator indices.

    ``j > 0`` stands for ``sigma_j`` and ``j < 0`` for its inverse.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "letters", tuple(int(j) for j in self.letters))
        for j in self.letters:
            if not 1 <= abs(j) <= self.n - 1:
                raise ParameterError(f"letter {j} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> BraidWord:
        """Parse whitespace-separated signed integers such as ``"1 2 -1 3"``."""
        try:
            letters = [int(tok) for tok in text.split()]
        except ValueError as exc:
            raise ParameterError(f"cannot parse braid word {text!r}") from exc
        if 0 in letters:
            raise ParameterError("braid letters must be nonzero")
        return cls(n, tuple(letters))

    @classmethod
    def random(cls, n: int, length: int, rng: random.Random) -> BraidWord:
        letters = [rng.choice((-1, 1)) * rng.randint(1, n - 1) for _ in range(length)]
        return cls(n, tuple(letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ParameterError("cannot concatenate words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-j for j in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(j) for j in self.letters)


@lru_cache(maxsize=None)
def _rho(i: int, n: int, m: int, inverse: bool) -> np.ndarray:
    op = embed_local(build_r_direct(m), i, n + 1)
    if inverse:
        op = dagger(op).copy()
    op.setflags(write=False)
    return op


def rho_sigma(i: int, ctx: RepContext) -> np.ndarray:
    if not 1 <= i <= ctx.n - 1:
        raise ParameterError(f"sigma_{i} out of range for n={ctx.n}")
    return _rho(i, ctx.n, ctx.m, False)


def rho_sigma_inv(i: int, ctx: RepContext) -> np.ndarray:
    if not 1 <= i <= ctx.n - 1:
        raise ParameterError(f"sigma_{i} out of range for n={ctx.n}")
    return _rho(i, ctx.n, ctx.m, True)


def rho_letter(j: int, ctx: RepContext) -> np.ndarray:
    return rho_sigma(j, ctx) if j > 0 else rho_sigma_inv(-j, ctx)


def eval_word(w: BraidWord, ctx: RepContext) -> np.ndarray:
    if w.n != ctx.n:
        raise ParameterError(f"word is on {w.n} strands, context on {ctx.n}")
    out = identity(ctx.qubits)
    for j in w.letters:
        out = out @ rho_letter(j, ctx)
    return out


# --------------------------------------------------------------------------
# checks


def gyb_residual(r: np.ndarray) -> float:
    """Max entry distance between the two sides of the 3-qubit gYB equation."""
    if r.shape != (8, 8):
        raise ParameterError(f"gYB check needs an 8x8 matrix, got {r.shape}")
    eye = np.eye(2, dtype=complex)
    a = kron(r, eye)
    b = kron(eye, r)
    return max_entry_distance(a @ b @ a, b @ a @ b)


def check_gyb(r: np.ndarray, tol: float = 1e-12, m: int | None = None) -> CheckReport:
    clock = stopwatch()
    report = CheckReport.from_residuals("gyb_equation", None, m, [("R", gyb_residual(r))], tol)
    report.elapsed_ms = clock()
    return report


def check_far_commutativity(ctx: RepContext, tol: float = 1e-12) -> CheckReport:
    """Commutator residual of every pair ``sigma_i, sigma_j`` with ``j - i >= 2``.

    Pairs at distance exactly 2 share one qubit and are the nontrivial
    cases.  With ``n < 4`` there are no pairs and the check passes vacuously.
    """
    clock = stopwatch()
    out = []
    for i in range(1, ctx.n):
        for j in range(i + 2, ctx.n):
            a, b = rho_sigma(i, ctx), rho_sigma(j, ctx)
            out.append((f"[s{i},s{j}]", max_entry_distance(a @ b, b @ a)))
    report = CheckReport.from_residuals("far_commutativity", ctx.n, ctx.m, out, tol)
    report.elapsed_ms = clock()
    return report


def check_braid_relation(ctx: RepContext, tol: float = 1e-12) -> CheckReport:
    clock = stopwatch()
    out = []
    for i in range(1, ctx.n - 1):
        a, b = rho_sigma(i, ctx), rho_sigma(i + 1, ctx)
        out.append((f"s{i}s{i+1}s{i}", max_entry_distance(a @ b @ a, b @ a @ b)))
    report = CheckReport.from_residuals("braid_relation", ctx.n, ctx.m, out, tol)
    report.elapsed_ms = clock()
    return report


def check_unitarity(ctx: RepContext) -> CheckReport:
    clock = stopwatch()
    out = []
    for i in range(1, ctx.n):
        a = rho_sigma(i, ctx)
        out.append((f"s{i}", max_entry_distance(a @ dagger(a), identity(ctx.qubits))))
    report = CheckReport.from_residuals("unitarity", ctx.n, ctx.m, out, ctx.tol_unitary)
    report.elapsed_ms = clock()
    return report


def operator_order(a: np.ndarray, max_k: int = 1000, tol: float = TOL_EQ) -> int | None:
    """Smallest ``1 <= k <= max_k`` with ``a**k = I`` within ``tol``, else None."""
    eye = np.eye(a.shape[0])
    power = np.array(a, dtype=complex)
    for k in range(1, max_k + 1):
        if max_entry_distance(power, eye) < tol:
            return k
        power = power @ a
    return None
