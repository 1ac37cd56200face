"""Matrices of the abelian and symmetric generators of the image.

Both odd-m cases share one code path that differs only in three constants:

* the rotation angle, ``2 pi / 3`` for m = 3 and ``pi / m`` otherwise;
* the global sign on the abelian generators, +1 for m = 3 and -1 otherwise;
* the dressing on ``NOT_k``: ``Z_{k-1} Z_{k+1}`` for m = 3 and ``-1`` otherwise.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from ..braidrep import RepContext
from ..gates import GateParams, ParameterError, exp_involution, not_i, pauli_z, s_kl
from ..qlinalg import identity, matpow
from .permutation import Permutation
from .symbolic import ImageElement, Pair, pair_to_interval


def rotation_angle(m: int) -> float:
    return 2 * math.pi / 3 if m == 3 else math.pi / m


def skl_sign(m: int) -> int:
    return 1 if m == 3 else -1


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def _skl_matrix(k: int, l: int, n: int, m: int) -> np.ndarray:
    word = s_kl(k, l, GateParams(n, m))
    angle = (-1) ** (l - k) * rotation_angle(m)
    return _frozen(skl_sign(m) * exp_involution(word, angle))


def gamma_skl_generator_matrix(k: int, l: int, ctx: RepContext) -> np.ndarray:
    """Abelian generator for ``S_{k,l}``, ``2 <= k <= l <= n``.

    ``exp(2 pi i/3 (-1)^(l-k) S_kl)`` for m = 3 and
    ``-exp(pi i/m (-1)^(l-k) S_kl)`` for m >= 5.
    """
    if not 2 <= k <= l <= ctx.n:
        raise ParameterError(f"need 2 <= k <= l <= {ctx.n}, got ({k}, {l})")
    return _skl_matrix(k, l, ctx.n, ctx.m)


def pair_generator_matrix(pair: Pair, ctx: RepContext) -> np.ndarray:
    """Abelian generator indexed by the strand pair ``{a, b}`` (= ``S_{a+1,b}``)."""
    k, l = pair_to_interval(pair)
    return gamma_skl_generator_matrix(k, l, ctx)


@lru_cache(maxsize=None)
def _not_matrix(k: int, n: int, m: int) -> np.ndarray:
    if m == 3:
        q = n + 1
        return _frozen(pauli_z(k - 1, q) @ pauli_z(k + 1, q) @ not_i(k, n))
    return _frozen(-not_i(k, n))


def gamma_not_generator_matrix(k: int, ctx: RepContext) -> np.ndarray:
    """``Z_{k-1} Z_{k+1} NOT_k`` for m = 3, ``-NOT_k`` for m >= 5 (``2 <= k <= n``)."""
    if not 2 <= k <= ctx.n:
        raise ParameterError(f"need 2 <= k <= {ctx.n}, got {k}")
    return _not_matrix(k, ctx.n, ctx.m)


def permutation_matrix(perm: Permutation, ctx: RepContext,
                       decomposition: list[int] | None = None) -> np.ndarray:
    """Image of ``perm`` in the symmetric part; swap ``(i, i+1)`` maps to generator ``i + 1``."""
    if decomposition is None:
        decomposition = perm.adjacent_decomposition()
    out = identity(ctx.qubits)
    for i in decomposition:
        out = out @ gamma_not_generator_matrix(i + 1, ctx)
    return out


@lru_cache(maxsize=4096)
def _pair_power(pair: Pair, e: int, n: int, m: int) -> np.ndarray:
    k, l = pair_to_interval(pair)
    return _frozen(matpow(_skl_matrix(k, l, n, m), e))


def pair_generator_power(pair: Pair, e: int, ctx: RepContext) -> np.ndarray:
    """Cached ``e``-th power of the abelian generator at ``pair``."""
    return _pair_power(pair, e % ctx.m, ctx.n, ctx.m)


def symbolic_to_matrix(g: ImageElement, ctx: RepContext) -> np.ndarray:
    if (g.n, g.m) != (ctx.n, ctx.m):
        raise ParameterError(f"element from ({g.n}, {g.m}), context ({ctx.n}, {ctx.m})")
    out = identity(ctx.qubits)
    for pair, e in g.v.items():
        if e:
            out = out @ _pair_power(pair, e, ctx.n, ctx.m)
    return out @ permutation_matrix(g.perm, ctx)
