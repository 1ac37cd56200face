"""Exact normal forms for the image of rho_R.

An element is a pair ``(v, pi)``: ``v`` assigns a residue mod ``m`` to each
unordered pair ``{a, b}`` of strands and ``pi`` is a permutation of the
strands.  The pair ``{k-1, l}`` labels the abelian generator built from the
Pauli word ``S_{k,l}``; conjugating by the symmetric part moves a generator
by moving both endpoints of its pair.  The group law is

    (v, pi) (w, sigma) = (v + pi.w, pi sigma)

where ``pi.w`` sends the coordinate at ``{a, b}`` to ``{pi(a), pi(b)}``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..braidrep import BraidWord, RepContext
from ..gates import ParameterError, check_m, check_n
from .permutation import Permutation

Pair = tuple[int, int]


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[Pair, ...]:
    """Unordered strand pairs ``(a, b)``, ``a < b``, in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[Pair, int]:
    return {p: idx for idx, p in enumerate(pairs(n))}


def _sorted_pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def interval_to_pair(k: int, l: int) -> Pair:
    """Abelian generator ``S_{k,l}`` (2 <= k <= l) lives at pair ``(k-1, l)``."""
    return (k - 1, l)


def pair_to_interval(pair: Pair) -> tuple[int, int]:
    a, b = pair
    return (a + 1, b)


@dataclass(frozen=True)
class ExponentVector:
    n: int
    m: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) % self.m for c in self.coords)
        if len(coords) != self.n * (self.n - 1) // 2:
            raise ValueError(f"need {self.n * (self.n - 1) // 2} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, n: int, m: int) -> ExponentVector:
        return cls(n, m, (0,) * (n * (n - 1) // 2))

    @classmethod
    def unit(cls, pair: Pair, n: int, m: int, amount: int = 1) -> ExponentVector:
        coords = [0] * (n * (n - 1) // 2)
        coords[pair_index(n)[_sorted_pair(*pair)]] = amount
        return cls(n, m, tuple(coords))

    def __getitem__(self, pair: Pair) -> int:
        return self.coords[pair_index(self.n)[_sorted_pair(*pair)]]

    def items(self):
        return zip(pairs(self.n), self.coords)

    def _check(self, other: ExponentVector) -> None:
        if (self.n, self.m) != (other.n, other.m):
            raise ParameterError("exponent vectors from different (n, m)")

    def __add__(self, other: ExponentVector) -> ExponentVector:
        self._check(other)
        return ExponentVector(self.n, self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> ExponentVector:
        return ExponentVector(self.n, self.m, tuple(-a for a in self.coords))

    def __sub__(self, other: ExponentVector) -> ExponentVector:
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return " ".join(f"{{{a},{b}}}:{c}" for (a, b), c in self.items())


def pair_action(pi: Permutation, v: ExponentVector) -> ExponentVector:
    """Move the coordinate at ``{a, b}`` to ``{pi(a), pi(b)}``."""
    if pi.n != v.n:
        raise ParameterError(f"permutation on {pi.n} points, vector on {v.n}")
    index = pair_index(v.n)
    coords = [0] * len(v.coords)
    for (a, b), c in v.items():
        coords[index[_sorted_pair(pi(a), pi(b))]] = c
    return ExponentVector(v.n, v.m, tuple(coords))


@dataclass(frozen=True)
class ImageElement:
    v: ExponentVector
    perm: Permutation

    def __post_init__(self):
        if self.v.n != self.perm.n:
            raise ParameterError("exponent vector and permutation disagree on n")

    @property
    def n(self) -> int:
        return self.v.n

    @property
    def m(self) -> int:
        return self.v.m

    def __mul__(self, other: ImageElement) -> ImageElement:
        return mul(self, other)

    def inverse(self) -> ImageElement:
        return inv(self)

    def __pow__(self, k: int) -> ImageElement:
        if k < 0:
            return inv(self) ** (-k)
        out = identity(self.n, self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return self.v.is_zero() and self.perm.is_identity()

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity():
            g = g * self
            k += 1
        return k

    def __str__(self) -> str:
        return f"v=({self.v}) perm={self.perm}"


def identity(n: int, m: int) -> ImageElement:
    return ImageElement(ExponentVector.zero(n, m), Permutation.identity(n))


def mul(g: ImageElement, h: ImageElement) -> ImageElement:
    if (g.n, g.m) != (h.n, h.m):
        raise ParameterError(f"elements from ({g.n}, {g.m}) and ({h.n}, {h.m})")
    return ImageElement(g.v + pair_action(g.perm, h.v), g.perm * h.perm)


def inv(g: ImageElement) -> ImageElement:
    p_inv = g.perm.inverse()
    return ImageElement(-pair_action(p_inv, g.v), p_inv)


def braid_gen_symbolic(i: int, ctx: RepContext, inverse: bool = False) -> ImageElement:
    """Normal form of ``rho(sigma_i)``: unit at ``{i, i+1}`` with the swap ``(i, i+1)``."""
    n, m = ctx.n, ctx.m
    if not 1 <= i <= n - 1:
        raise ParameterError(f"sigma_{i} out of range for n={n}")
    g = ImageElement(ExponentVector.unit((i, i + 1), n, m),
                     Permutation.transposition(i, i + 1, n))
    return inv(g) if inverse else g


def word_to_symbolic(w: BraidWord, ctx: RepContext) -> ImageElement:
    if w.n != ctx.n:
        raise ParameterError(f"word is on {w.n} strands, context on {ctx.n}")
    out = identity(ctx.n, ctx.m)
    for j in w.letters:
        out = out * braid_gen_symbolic(abs(j), ctx, inverse=j < 0)
    return out


def all_elements(n: int, m: int):
    """Every element of ``Z_m^(n(n-1)/2) x| S_n``, vectors varying fastest."""
    size = n * (n - 1) // 2
    for images in itertools.permutations(range(1, n + 1)):
        perm = Permutation(images)
        for coords in itertools.product(range(m), repeat=size):
            yield ImageElement(ExponentVector(n, m, coords), perm)


def theoretical_order(n: int, m: int) -> int:
    """``m ** (n(n-1)/2) * n!``."""
    check_n(n)
    check_m(m)
    return m ** (n * (n - 1) // 2) * math.factorial(n)
