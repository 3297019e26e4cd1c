"""Boundary strata S_{j,mu} of the compactified Hurwitz space and their coefficients.

A stratum is labelled by the number ``j`` of branch points on one component
of the degenerate target and the ramification profile ``mu`` over the node.
Labels ``j`` and ``b - j`` name the same stratum; the canonical label has
``j <= b - j``.

The chain data ``m(mu)``, ``delta_i`` and ``e_i`` are inputs.  When none is
supplied the defaults are: ``m = lcm(mu)``, constant ``delta = 0`` and the
half-step sequence ``e_i = (m - i)/2``.  These are conventions, not derived
values, and every table row records which of them were used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from hurwitz_divisors.coverclass import CoverClass
from hurwitz_divisors.errors import DomainError, MissingChainDataError


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,1,1"``; parts given out of order are sorted."""
        try:
            parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
        except ValueError:
            raise ValueError(f"malformed partition string {text!r}") from None
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(d, d)]


def default_chain_length(mu: Partition) -> int:
    return math.lcm(*mu.parts)


@dataclass(frozen=True)
class StratumLabel:
    j: int
    mu: Partition
    b: int

    def __post_init__(self):
        if not 2 <= self.j <= self.b - 2:
            raise DomainError(f"j must satisfy 2 <= j <= b-2 = {self.b - 2}, got {self.j}")
        if self.j > self.b - self.j:
            raise DomainError(f"label j={self.j} is not canonical (use b-j={self.b - self.j})")

    @property
    def key(self) -> str:
        return f"{self.j}:{self.mu}"


def canonical_j(j: int, b: int) -> int:
    if not 2 <= j <= b - 2:
        raise DomainError(f"j must satisfy 2 <= j <= b-2 = {b - 2}, got {j}")
    return min(j, b - j)


def canonicalize(j: int, mu: Partition, b: int) -> StratumLabel:
    return StratumLabel(canonical_j(j, b), mu, b)


def enumerate_strata(cc: CoverClass) -> list[StratumLabel]:
    mus = partitions(cc.d)
    return [StratumLabel(j, mu, cc.b) for j in range(2, cc.b // 2 + 1) for mu in mus]


def chain_constant(d: int, n: int, r: int, dotP2: int) -> int:
    """The constant ``c = d - n - 2(r - D.P_2)`` of a boundary component."""
    if not 1 <= n <= d:
        raise ValueError(f"need 1 <= n <= d, got n={n}, d={d}")
    return d - n - 2 * (r - dotP2)


@dataclass(frozen=True)
class ChainData:
    """Numerical data along the chain ``R_0, ..., R_m`` over a node.

    ``c`` is optional because it does not enter ``sigma``; it is only needed
    for :func:`correction_coefficients`.
    """

    m: int
    delta: tuple[Fraction, ...]
    e: tuple[Fraction, ...]
    c: int | None = None
    provenance: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"chain length m must be >= 1, got {self.m}")
        delta = tuple(Fraction(x) for x in self.delta)
        e = tuple(Fraction(x) for x in self.e)
        if len(delta) != self.m + 1 or len(e) != self.m + 1:
            raise ValueError(
                f"delta and e need m+1 = {self.m + 1} entries, got {len(delta)} and {len(e)}"
            )
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "e", e)


def default_delta(m: int) -> tuple[Fraction, ...]:
    return (Fraction(0),) * (m + 1)


def default_e(m: int) -> tuple[Fraction, ...]:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return tuple(Fraction(m - i, 2) for i in range(m + 1))


DEFAULT_PROVENANCE = {"m": "lcm", "delta": "constant-zero", "e": "half-step"}


def default_chain(mu: Partition, m: int | None = None) -> ChainData:
    provenance = dict(DEFAULT_PROVENANCE)
    if m is None:
        m = default_chain_length(mu)
    else:
        provenance["m"] = "explicit"
    return ChainData(m, default_delta(m), default_e(m), provenance=provenance)


def correction_coefficients(chain: ChainData) -> list[Fraction]:
    """Coefficients of ``R_0, ..., R_{m-1}`` in the correction divisor ``A``."""
    if chain.c is None:
        raise ValueError("chain constant c is required for the correction divisor")
    m, c = chain.m, chain.c
    return [-Fraction(1, 2) * ((m - i) * c - chain.delta[i]) for i in range(m)]


def _square_steps(seq: Sequence[Fraction]) -> Fraction:
    return sum(((a - b) ** 2 for a, b in zip(seq, seq[1:])), Fraction(0))


def sigma(cc: CoverClass, j: int, mu: Partition, chain: ChainData) -> Fraction:
    """Coefficient of a boundary component of ``S_{j,mu}`` in the extended divisor class."""
    d, b, m = cc.d, cc.b, chain.m
    if not 2 <= j <= b - 2:
        raise DomainError(f"j must satisfy 2 <= j <= b-2 = {b - 2}, got {j}")
    if mu.d != d:
        raise ValueError(f"partition {mu} is not a partition of d={d}")
    if len(chain.delta) != m + 1 or len(chain.e) != m + 1:
        raise ValueError("delta and e must have m+1 entries")

    inverse_parts = sum((Fraction(1, p) for p in mu.parts), Fraction(0))
    local = Fraction(1, 12) * (d - inverse_parts)
    position = Fraction(j * (b - j) * (d - 2), 8 * (b - 1) * (d - 1))
    delta_term = Fraction(1, 8 * (d - 1)) * _square_steps(chain.delta)
    e_term = Fraction(d - 1, 2) * (Fraction(m, 4) - _square_steps(chain.e))
    return m * (local + position) - delta_term - e_term


ChainSource = Callable[[StratumLabel], ChainData]


def default_source(label: StratumLabel) -> ChainData:
    return default_chain(label.mu)


def mapping_source(data: Mapping[str, ChainData]) -> ChainSource:
    def lookup(label: StratumLabel) -> ChainData:
        try:
            return data[label.key]
        except KeyError:
            raise MissingChainDataError(
                f"no chain data for stratum j={label.j}, mu=({label.mu})"
            ) from None

    return lookup


@dataclass(frozen=True)
class SigmaRow:
    label: StratumLabel
    chain: ChainData
    sigma: Fraction

    @property
    def provenance(self) -> str:
        return format_provenance(self.chain.provenance)


def format_provenance(prov: Mapping[str, str]) -> str:
    if not prov:
        return "explicit"
    if all(v == "file" for v in prov.values()):
        return "explicit"
    return ";".join(f"{slot}={prov[slot]}" for slot in ("m", "delta", "e") if slot in prov)


def sigma_table(cc: CoverClass, source: ChainSource = default_source) -> list[SigmaRow]:
    rows = []
    for label in enumerate_strata(cc):
        chain = source(label)
        rows.append(SigmaRow(label, chain, sigma(cc, label.j, label.mu, chain)))
    return rows
