"""Numerical invariants of simply branched degree-d covers of genus g.

Writes ``g = k(d-1) + s`` with ``0 <= s <= d-2`` and counts
``b = 2g + 2d - 2`` branch points.  Pushforward types below are
``gamma_* O_C`` (or ``gamma_* O_C(D)``) as split bundles on the line.
"""

from __future__ import annotations

from dataclasses import dataclass

from hurwitz_divisors.errors import DomainError, PreconditionError
from hurwitz_divisors.p1bundles import SplittingType, h0, h1, twist


@dataclass(frozen=True)
class CoverClass:
    d: int
    g: int
    k: int
    s: int
    b: int

    def __post_init__(self):
        if self.d < 2 or self.g < self.d:
            raise DomainError(f"need 2 <= d <= g, got d={self.d}, g={self.g}")
        if self.g != self.k * (self.d - 1) + self.s or not 0 <= self.s <= self.d - 2:
            raise DomainError(
                f"inconsistent decomposition g={self.g}, k={self.k}, s={self.s}, d={self.d}"
            )
        if self.b != 2 * self.g + 2 * self.d - 2:
            raise DomainError(f"branch count b={self.b} != 2g + 2d - 2")

    @classmethod
    def relaxed(cls, d: int, g: int) -> "CoverClass":
        """Like :func:`decompose` but only asks for ``2 <= d <= g``."""
        if d < 2 or g < d:
            raise DomainError(f"need 2 <= d <= g, got d={d}, g={g}")
        k, s = divmod(g, d - 1)
        return cls(d, g, k, s, 2 * g + 2 * d - 2)


def decompose(d: int, g: int) -> CoverClass:
    if d < 3:
        raise DomainError(f"degree must be at least 3, got d={d}")
    if g < d:
        raise DomainError(f"genus must be at least the degree, got d={d}, g={g}")
    return CoverClass.relaxed(d, g)


def generic_pushforward(cc: CoverClass) -> SplittingType:
    """Type of ``gamma_* O_C`` for a general cover (Ballico)."""
    k, s, d = cc.k, cc.s, cc.d
    return SplittingType.from_blocks([(0, 1), (-(k + 1), d - 1 - s), (-(k + 2), s)])


def special_pushforward_case1(cc: CoverClass) -> SplittingType:
    """Pushforward for a general cover whose cokernel type is the case ``s <= d-4``
    maximizer ``(k, (k+1)^(d-s-3), (k+2)^(s+1))``.

    Only this case has an explicit form; the cases ``s = d-3`` and
    ``s = d-2`` are covered through the maximizer instead.
    """
    k, s, d = cc.k, cc.s, cc.d
    if s > d - 4:
        raise DomainError(f"case (1) needs s <= d-4, got s={s}, d={d}")
    return SplittingType.from_blocks(
        [(0, 1), (-k, 1), (-(k + 1), d - s - 3), (-(k + 2), s + 1)]
    )


def twisted_section_counts(cc: CoverClass, twist_by: int) -> tuple[int, int]:
    t = twist(generic_pushforward(cc), twist_by)
    return h0(t), h1(t)


def balanced_pushforward_with_divisor(cc: CoverClass) -> SplittingType:
    """Type of ``gamma_* O_C(D)`` for general ``(gamma, D)`` with ``h^0(D) = 1``."""
    return SplittingType.from_blocks([(0, 1), (-(cc.k + 1), cc.d - 1)])


def _check_single_section(t: SplittingType) -> None:
    exps = t.exponents
    if exps[-1] != 0 or (len(exps) > 1 and exps[-2] > -1):
        raise PreconditionError(
            f"type {t} must have exactly one zero exponent and all others <= -1 "
            f"(h0 = {h0(t)}, top exponent {exps[-1]})"
        )
    if len(exps) < 2:
        raise PreconditionError(f"type {t} has no cokernel (rank 1)")


def cokernel_dual_type(t: SplittingType) -> SplittingType:
    """Dual of the cokernel of ``O -> t`` when ``O`` is the split-off trivial summand."""
    _check_single_section(t)
    return SplittingType(tuple(-e for e in t.exponents[:-1]))


def unbalanced_twisted_dual_check(t: SplittingType, k: int) -> bool:
    """Whether the cokernel dual twisted by ``O(-k-1)`` has the witness shape
    ``b_1 = -1, b_i >= 0`` in degree zero."""
    u = twist(cokernel_dual_type(t), -(k + 1)).exponents
    if u[0] != -1 or sum(u) != 0:
        return False
    return all(e >= 0 for e in u[1:])


def gate_reason(d: int, g: int) -> str | None:
    """Why ``(d, g)`` fails the divisorial gate, or ``None`` if it passes."""
    if d < 3:
        return f"d = {d} < 3"
    if g < d:
        return f"g = {g} < d = {d}"
    if (d, g) == (3, 5):
        return "(d,g) = (3,5) excluded"
    if g == 2 * d - 3:
        return f"g = 2d-3 = {g} excluded"
    if g == 2 * d - 4:
        return f"g = 2d-4 = {g} excluded"
    return None


def divisorial_gate(d: int, g: int) -> bool:
    return gate_reason(d, g) is None


@dataclass(frozen=True)
class GreedyTrajectory:
    steps: tuple[int, ...]
    residual_degree: int


def greedy_trajectory(cc: CoverClass) -> GreedyTrajectory:
    """Dimension ledger of the greedy choice of ramification points for D.

    ``steps[t]`` is ``h^0(K_C - k g^1_d - p_1 - ... - p_t)``.  A point that is
    not a base point exists at each step because the ``b`` ramification
    points outnumber the degree of the residual system.
    """
    residual = 2 * cc.g - 2 - cc.k * cc.d
    current = twisted_section_counts(cc, cc.k)[1]  # h^0(K - k g^1_d) = h^1(k g^1_d)
    if cc.b <= residual:
        raise AssertionError(f"degree certificate fails: b={cc.b}, residual degree {residual}")
    steps = [current]
    chosen = 0
    while current > 0:
        if cc.b <= residual - chosen:
            raise AssertionError(
                f"degree certificate fails at step {chosen}: b={cc.b}, "
                f"residual degree {residual - chosen}"
            )
        chosen += 1
        current -= 1
        steps.append(current)
    if chosen != cc.s:
        raise AssertionError(f"ledger used {chosen} points, expected s={cc.s}")
    return GreedyTrajectory(tuple(steps), residual)
