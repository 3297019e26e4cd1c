"""Acceptable (d-1)-tuples and the weighted-sum maximizer.

A non-decreasing tuple ``(a_1, ..., a_{d-1})`` with ``sum = b/2`` is
acceptable for ``(d, g)`` when

1. ``a_1 >= b / (d(d-1))``
2. ``a_{d-1} <= b / d``
3. a spread condition, read either as ``a_{i+1} - a_i <= a_1`` (GAP, the
   default) or literally as ``a_{i+1} - a_1 <= a_1`` (LITERAL).

The literal reading rejects ``(2, 4, 5)`` for ``(d, g) = (4, 8)``, which is
the closed-form maximizer for ``s = d - 2``; LITERAL is kept for auditing
that discrepancy.  All bound comparisons are done on integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from hurwitz_divisors.coverclass import CoverClass
from hurwitz_divisors.errors import EmptySearchError, ExclusionError, TieError


class Condition3(enum.Enum):
    GAP = "gap"
    LITERAL = "literal"


@dataclass(frozen=True)
class AcceptabilityConfig:
    condition3: Condition3 = Condition3.GAP


DEFAULT_CONFIG = AcceptabilityConfig()


def entry_bounds(cc: CoverClass) -> tuple[int, int]:
    """Integer range ``[ceil(b/(d(d-1))), floor(b/d)]`` allowed by conditions (1)-(2)."""
    d, b = cc.d, cc.b
    lo = -(-b // (d * (d - 1)))
    hi = b // d
    return lo, hi


def _spread_ok(a1: int, prev: int, nxt: int, mode: Condition3) -> bool:
    if mode is Condition3.GAP:
        return nxt - prev <= a1
    return nxt - a1 <= a1


def is_acceptable(
    t: Sequence[int], cc: CoverClass, cfg: AcceptabilityConfig = DEFAULT_CONFIG
) -> bool:
    d, b = cc.d, cc.b
    if len(t) != d - 1:
        raise ValueError(f"expected a tuple of length d-1 = {d - 1}, got {len(t)}")
    if any(x > y for x, y in zip(t, t[1:])):
        return False
    if 2 * sum(t) != b:
        return False
    a1 = t[0]
    if a1 * d * (d - 1) < b:
        return False
    if t[-1] * d > b:
        return False
    return all(_spread_ok(a1, x, y, cfg.condition3) for x, y in zip(t, t[1:]))


def _generate(cc: CoverClass, cfg: AcceptabilityConfig, a1: int | None) -> Iterator[tuple[int, ...]]:
    lo, hi = entry_bounds(cc)
    length = cc.d - 1
    total = cc.b // 2
    mode = cfg.condition3
    firsts = range(lo, hi + 1) if a1 is None else ([a1] if lo <= a1 <= hi else [])

    def extend(prefix: list[int], remaining: int) -> Iterator[tuple[int, ...]]:
        slots = length - len(prefix)
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        first, prev = prefix[0], prefix[-1]
        for v in range(prev, hi + 1):
            # v fills every later slot at least, hi at most
            if v * slots > remaining:
                break
            if remaining - v > hi * (slots - 1):
                continue
            if not _spread_ok(first, prev, v, mode):
                break
            prefix.append(v)
            yield from extend(prefix, remaining - v)
            prefix.pop()

    if 2 * total != cc.b:
        return
    for first in firsts:
        if first * length > total or total - first > hi * (length - 1):
            continue
        yield from extend([first], total - first)


def enumerate_acceptable(
    cc: CoverClass, cfg: AcceptabilityConfig = DEFAULT_CONFIG, a1: int | None = None
) -> list[tuple[int, ...]]:
    """All acceptable tuples in lexicographic order, optionally with fixed first entry."""
    return list(_generate(cc, cfg, a1))


def weighted_sum(t: Sequence[int]) -> int:
    """``sum_{i=1}^{d-1} (d - i) a_i`` where ``d = len(t) + 1``."""
    n = len(t)
    return sum((n - i) * a for i, a in enumerate(t))


def maximize(
    cc: CoverClass, a1: int, cfg: AcceptabilityConfig = DEFAULT_CONFIG
) -> tuple[int, ...]:
    """The acceptable tuple starting with ``a1`` of largest weighted sum.

    Raises :class:`TieError` rather than picking one when the argmax is not unique.
    """
    best: list[tuple[int, ...]] = []
    best_weight = None
    for t in _generate(cc, cfg, a1):
        w = weighted_sum(t)
        if best_weight is None or w > best_weight:
            best, best_weight = [t], w
        elif w == best_weight:
            best.append(t)
    if not best:
        raise EmptySearchError(f"no acceptable tuple for (d,g)=({cc.d},{cc.g}) with a_1={a1}")
    if len(best) > 1:
        raise TieError(
            f"{len(best)} acceptable tuples share the maximal weight {best_weight} "
            f"for (d,g)=({cc.d},{cc.g}), a_1={a1}",
            best,
        )
    return best[0]


def expected_maximizer(cc: CoverClass) -> tuple[int, ...]:
    """Closed-form maximizing tuple for ``a_1 = k``."""
    d, g, k, s = cc.d, cc.g, cc.k, cc.s
    if s <= d - 4:
        return (k,) + (k + 1,) * (d - s - 3) + (k + 2,) * (s + 1)
    if s == d - 3:
        if g == 2 * (d - 2):
            raise ExclusionError(f"s = d-3 requires g != 2(d-2); got (d,g)=({d},{g})")
        return (k,) + (k + 2,) * (d - 2)
    if (d, g) == (3, 5):
        raise ExclusionError("s = d-2 requires (d,g) != (3,5)")
    if g == 2 * d - 3:
        raise ExclusionError(f"s = d-2 requires g != 2d-3; got (d,g)=({d},{g})")
    return (k,) + (k + 2,) * (d - 3) + (k + 3,)
