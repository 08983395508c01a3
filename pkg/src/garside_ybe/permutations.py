"""Permutations of {1, .., n} in image-table notation.

The image table of a permutation p is the tuple (p(1), .., p(n)).  All
indices are 1-based throughout the package, matching the generator names
x1..xn used in presentations and in the command line tools.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1, .., n}, stored as its image table.

    >>> p = Permutation((2, 3, 1))
    >>> p(1), p(2), p(3)
    (2, 3, 1)
    >>> p.inverse().images
    (3, 1, 2)
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise InputError("permutation degree must be at least 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InputError(f"not a bijection of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build a permutation from disjoint cycles; fixed points may be omitted.

        >>> Permutation.from_cycles(5, [(1, 2, 3, 4)]).images
        (2, 3, 4, 1, 5)
        """
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            for x in cycle:
                if not 1 <= x <= n:
                    raise InputError(f"cycle entry {x} outside 1..{n}")
                if x in seen:
                    raise InputError(f"cycles are not disjoint at {x}")
                seen.add(x)
            for pos, x in enumerate(cycle):
                images[x - 1] = cycle[(pos + 1) % len(cycle)]
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise InputError(f"index {i} outside 1..{self.n}")
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (p * q)(i) = p(q(i))."""
        if self.n != other.n:
            raise InputError("cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def orbit(self, x: int) -> tuple[int, ...]:
        """The cycle through x, starting at x, in traversal order."""
        if not 1 <= x <= self.n:
            raise InputError(f"index {x} outside 1..{self.n}")
        out = [x]
        y = self(x)
        while y != x:
            out.append(y)
            y = self(y)
        return tuple(out)

    def cycles(self, include_fixed: bool = True) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles ordered by smallest member, each starting at it."""
        out = []
        seen: set[int] = set()
        for x in range(1, self.n + 1):
            if x in seen:
                continue
            cycle = self.orbit(x)
            seen.update(cycle)
            if include_fixed or len(cycle) > 1:
                out.append(cycle)
        return tuple(out)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.images, start=1) if i == v)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, including fixed points, sorted decreasing."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def cycle_string(self) -> str:
        """Cycle notation, fixed points shown: '(1,2,3,4)(5)'."""
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())
