"""Split vector bundles on the projective line.

A bundle ``O(e_1) + ... + O(e_r)`` is recorded by its exponents, which are
the actual degrees of the line-bundle summands.  A pushforward such as
``O + O(-3) + O(-3)`` is therefore stored as ``(-3, -3, 0)`` and its dual
as ``(0, 3, 3)``.  Exponents are always kept sorted non-decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class SplittingType:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(sorted(int(e) for e in self.exponents))
        if not exps:
            raise ValueError("a splitting type needs rank >= 1")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents: int) -> "SplittingType":
        return cls(tuple(exponents))

    @classmethod
    def from_blocks(cls, blocks: Iterable[tuple[int, int]]) -> "SplittingType":
        """Build from ``(exponent, multiplicity)`` pairs, skipping empty blocks."""
        exps: list[int] = []
        for value, count in blocks:
            if count < 0:
                raise ValueError(f"negative multiplicity {count} for O({value})")
            exps.extend([value] * count)
        return cls(tuple(exps))

    def rank(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def to_list(self) -> list[int]:
        return list(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __str__(self):
        return ",".join(str(e) for e in self.exponents)


def h0(t: SplittingType) -> int:
    return sum(max(e + 1, 0) for e in t.exponents)


def h1(t: SplittingType) -> int:
    # Serre duality on the line: h^1(O(e)) = h^0(O(-e-2))
    return sum(max(-e - 1, 0) for e in t.exponents)


def twist(t: SplittingType, m: int) -> SplittingType:
    return SplittingType(tuple(e + m for e in t.exponents))


def dual(t: SplittingType) -> SplittingType:
    return SplittingType(tuple(-e for e in t.exponents))


def minimal_h0(rank: int, degree: int) -> int:
    """Smallest possible h^0 of a rank-``rank`` bundle of degree ``degree``.

    The bound is attained by any type whose exponents are all >= -1.
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    return max(rank + degree, 0)


def is_minimal_sections(t: SplittingType) -> bool:
    return h0(t) == minimal_h0(t.rank(), t.degree())


def is_trivial_type(t: SplittingType) -> bool:
    return all(e == 0 for e in t.exponents)


def is_balanced(t: SplittingType) -> bool:
    return t.exponents[-1] - t.exponents[0] <= 1
