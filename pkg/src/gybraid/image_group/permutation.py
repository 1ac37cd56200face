from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1, ..., n}`` stored in one-line notation.

    ``images[a - 1]`` is the image of ``a``.  Products compose right to
    left: ``(p * q)(a) == p(q(a))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(a) for a in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_adjacent(cls, word: list[int], n: int) -> Permutation:
        """Compose ``s_{i1} s_{i2} ...`` where ``s_i`` swaps ``i`` and ``i + 1``."""
        p = cls.identity(n)
        for i in word:
            p = p * cls.transposition(i, i + 1, n)
        return p

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise ValueError("permutations of different degree")
        return Permutation(tuple(self.images[b - 1] for b in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for a, b in enumerate(self.images, 1):
            inv[b - 1] = a
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def adjacent_decomposition(self) -> list[int]:
        """Indices ``[i1, ..., ik]`` with ``self == s_{i1} s_{i2} ... s_{ik}``.

        Found by bubble sort of the one-line form; each swap at positions
        ``(i, i+1)`` is a right multiplication by ``s_i``.
        """
        line = list(self.images)
        swaps = []
        for end in range(len(line) - 1, 0, -1):
            for i in range(end):
                if line[i] > line[i + 1]:
                    line[i], line[i + 1] = line[i + 1], line[i]
                    swaps.append(i + 1)
        return swaps[::-1]

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"
