"""Breadth-first closure of the image of rho_R.

Two independent backends:

``matrix``
    multiplies dense matrices by the generators ``rho(sigma_i)^{+-1}``
    (applied locally, without forming Kronecker products) and tracks
    membership through canonical keys.  Only keys are retained, plus the
    current frontier.

``symbolic``
    works in the abstract semidirect product.  Elements are packed into
    integers ``vcode * n! + perm_rank`` and a whole BFS level is advanced
    with table lookups in numpy.
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Callable

import numpy as np

from ..braidrep import RepContext
from ..gates import build_r_direct, not_i
from ..qlinalg import KEY_GRID, apply_local, canonical_keys, dagger
from ..reports import EnumerationReport, stopwatch
from .matrices import gamma_not_generator_matrix
from .symbolic import braid_gen_symbolic, identity, pair_index, theoretical_order

log = logging.getLogger(__name__)

DEFAULT_MAX_ELEMENTS = 10 ** 6
_BLOCK = 1024
_BITMAP_LIMIT = 2 * 10 ** 8

Mover = Callable[[np.ndarray], np.ndarray]


def _left_local(op: np.ndarray, start: int) -> Mover:
    """Left-multiply every matrix of a ``(count, d, d)`` stack by a local gate."""
    def move(stack: np.ndarray) -> np.ndarray:
        count, d, _ = stack.shape
        cols = stack.transpose(1, 0, 2).reshape(d, count * d)
        return apply_local(op, start, cols).reshape(d, count, d).transpose(1, 0, 2)
    return move


def _left_dense(op: np.ndarray) -> Mover:
    return lambda stack: np.matmul(op, stack)


def matrix_closure(movers: list[Mover], dim: int, max_elements: int = DEFAULT_MAX_ELEMENTS,
                   grid: float = KEY_GRID) -> tuple[int, bool, list[int]]:
    """BFS from the identity under the given generator actions.

    Returns ``(elements found, truncated, frontier sizes per level)``.
    Stops as soon as an element beyond ``max_elements`` would be added.
    """
    start = np.eye(dim, dtype=complex)[None]
    seen = set(canonical_keys(start, grid))
    frontier = start
    sizes = [1]
    while len(frontier):
        fresh = []
        for lo in range(0, len(frontier), _BLOCK):
            block = frontier[lo:lo + _BLOCK]
            for move in movers:
                cand = move(block)
                keep = []
                for idx, key in enumerate(canonical_keys(cand, grid)):
                    if key in seen:
                        continue
                    if len(seen) >= max_elements:
                        return len(seen), True, sizes
                    seen.add(key)
                    keep.append(idx)
                if keep:
                    fresh.append(cand[keep])
        frontier = np.concatenate(fresh) if fresh else frontier[:0]
        if len(frontier):
            sizes.append(len(frontier))
    return len(seen), False, sizes


def closure_order(generators: list[np.ndarray], max_elements: int = DEFAULT_MAX_ELEMENTS,
                  grid: float = KEY_GRID) -> int | None:
    """Order of the matrix group generated by ``generators`` (None if truncated)."""
    dim = generators[0].shape[0]
    count, truncated, _ = matrix_closure([_left_dense(g) for g in generators], dim,
                                         max_elements, grid)
    return None if truncated else count


def not_group_order(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int | None:
    """Order of the group generated by the bare ``NOT_2, ..., NOT_n``."""
    return closure_order([not_i(k, n) for k in range(2, n + 1)], max_elements)


def gamma_not_order(ctx: RepContext, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int | None:
    gens = [gamma_not_generator_matrix(k, ctx) for k in range(2, ctx.n + 1)]
    return closure_order(gens, max_elements, ctx.grid)


def _report(ctx, backend, found, truncated, sizes, clock) -> EnumerationReport:
    return EnumerationReport(ctx.n, ctx.m, backend, found, theoretical_order(ctx.n, ctx.m),
                             truncated, levels=len(sizes), max_frontier=max(sizes, default=0),
                             elapsed_ms=clock())


def _enumerate_matrix(ctx: RepContext, max_elements: int) -> EnumerationReport:
    clock = stopwatch()
    r = build_r_direct(ctx.m)
    r_inv = dagger(r).copy()
    movers = []
    for i in range(1, ctx.n):
        movers.append(_left_local(r, i))
        movers.append(_left_local(r_inv, i))
    found, truncated, sizes = matrix_closure(movers, ctx.dim, max_elements, ctx.grid)
    return _report(ctx, "matrix", found, truncated, sizes, clock)


def _symbolic_tables(n: int):
    perms = list(itertools.permutations(range(1, n + 1)))
    rank = {p: r for r, p in enumerate(perms)}
    index = pair_index(n)
    compose = np.empty((len(perms), n - 1), dtype=np.int64)
    target = np.empty((len(perms), n - 1), dtype=np.int64)
    for r, p in enumerate(perms):
        for g in range(n - 1):
            q = list(p)
            q[g], q[g + 1] = q[g + 1], q[g]
            compose[r, g] = rank[tuple(q)]
            a, b = sorted((p[g], p[g + 1]))
            target[r, g] = index[(a, b)]
    return compose, target


def _enumerate_symbolic_fast(ctx: RepContext, max_elements: int) -> EnumerationReport:
    clock = stopwatch()
    n, m = ctx.n, ctx.m
    nfact = math.factorial(n)
    npairs = n * (n - 1) // 2
    compose, target = _symbolic_tables(n)
    powers = np.array([m ** p for p in range(npairs)], dtype=np.int64)
    seen = np.zeros(m ** npairs * nfact, dtype=bool)
    seen[0] = True  # identity packs to 0
    found = 1
    frontier = np.zeros(1, dtype=np.int64)
    sizes = [1]
    truncated = False
    while len(frontier) and not truncated:
        rank = frontier % nfact
        vcode = frontier // nfact
        cands = []
        for g in range(n - 1):
            w = powers[target[rank, g]]
            digit = (vcode // w) % m
            base = vcode - digit * w
            new_rank = compose[rank, g]
            # right multiplication by sigma and by its inverse: digit +1 / -1
            for step in (1, -1):
                cands.append((base + ((digit + step) % m) * w) * nfact + new_rank)
        cand = np.unique(np.concatenate(cands))
        fresh = cand[~seen[cand]]
        if found + len(fresh) > max_elements:
            fresh = fresh[:max_elements - found]
            truncated = True
        seen[fresh] = True
        found += len(fresh)
        frontier = fresh
        if len(frontier):
            sizes.append(len(frontier))
        log.debug("symbolic level %d: %d new, %d total", len(sizes), len(fresh), found)
    return _report(ctx, "symbolic", found, truncated, sizes, clock)


def enumerate_symbolic_reference(ctx: RepContext,
                                 max_elements: int = DEFAULT_MAX_ELEMENTS) -> EnumerationReport:
    """Plain BFS over ``ImageElement`` objects; slow but obviously correct."""
    clock = stopwatch()
    gens = [braid_gen_symbolic(i, ctx, inverse=s) for i in range(1, ctx.n) for s in (False, True)]
    start = identity(ctx.n, ctx.m)
    seen = {start}
    frontier = [start]
    sizes = [1]
    truncated = False
    while frontier and not truncated:
        fresh = []
        for g in frontier:
            for h in gens:
                gh = g * h
                if gh in seen:
                    continue
                if len(seen) >= max_elements:
                    truncated = True
                    break
                seen.add(gh)
                fresh.append(gh)
            if truncated:
                break
        frontier = fresh
        if fresh:
            sizes.append(len(fresh))
    return _report(ctx, "symbolic", len(seen), truncated, sizes, clock)


def enumerate_image(ctx: RepContext, max_elements: int = DEFAULT_MAX_ELEMENTS,
                    backend: str = "matrix") -> EnumerationReport:
    """Closure of ``{rho(sigma_i)^{+-1}}`` compared against the predicted order.

    When the group is larger than ``max_elements`` the run stops early and
    the report is marked truncated.
    """
    if backend == "matrix":
        return _enumerate_matrix(ctx, max_elements)
    if backend != "symbolic":
        raise ValueError(f"unknown backend {backend!r}")
    packed = theoretical_order(ctx.n, ctx.m)
    if packed <= _BITMAP_LIMIT:
        return _enumerate_symbolic_fast(ctx, max_elements)
    log.info("packed code space %d too large for a bitmap; using reference BFS", packed)
    return enumerate_symbolic_reference(ctx, max_elements)
