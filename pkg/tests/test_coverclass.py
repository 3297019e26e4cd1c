import pytest

from hurwitz_divisors.coverclass import (
    CoverClass,
    balanced_pushforward_with_divisor,
    cokernel_dual_type,
    decompose,
    divisorial_gate,
    gate_reason,
    generic_pushforward,
    greedy_trajectory,
    special_pushforward_case1,
    twisted_section_counts,
    unbalanced_twisted_dual_check,
)
from hurwitz_divisors.errors import DomainError, PreconditionError
from hurwitz_divisors.p1bundles import SplittingType, h0, h1, is_trivial_type, twist

from conftest import sweep


def T(*exps):
    return SplittingType.of(*exps)


@pytest.mark.parametrize(
    "d, g, k, s, b",
    [(3, 4, 2, 0, 12), (5, 7, 1, 3, 22), (6, 11, 2, 1, 32)],
)
def test_decompose(d, g, k, s, b):
    cc = decompose(d, g)
    assert (cc.k, cc.s, cc.b) == (k, s, b)


@pytest.mark.parametrize("d, g", [(2, 5), (4, 3), (0, 0)])
def test_decompose_domain(d, g):
    with pytest.raises(DomainError):
        decompose(d, g)


def test_relaxed_constructor_allows_degree_two():
    cc = CoverClass.relaxed(2, 3)
    assert (cc.k, cc.s, cc.b) == (3, 0, 8)
    with pytest.raises(DomainError):
        CoverClass.relaxed(5, 4)


def test_cover_class_validates_fields():
    with pytest.raises(DomainError):
        CoverClass(5, 7, 1, 2, 22)
    with pytest.raises(DomainError):
        CoverClass(5, 7, 1, 3, 20)


@pytest.mark.parametrize(
    "d, g, expected",
    [(4, 6, (-3, -3, -3, 0)), (5, 7, (-3, -3, -3, -2, 0)), (3, 4, (-3, -3, 0))],
)
def test_generic_pushforward(d, g, expected):
    assert generic_pushforward(decompose(d, g)) == T(*expected)


@pytest.mark.parametrize(
    "d, g, shift, expected",
    [(5, 7, 1, (2, 3)), (4, 6, 2, (3, 0)), (4, 6, 0, (1, 6))],
)
def test_twisted_section_counts(d, g, shift, expected):
    assert twisted_section_counts(decompose(d, g), shift) == expected


def test_balanced_pushforward_with_divisor():
    assert balanced_pushforward_with_divisor(decompose(5, 7)) == T(-2, -2, -2, -2, 0)
    cc = decompose(3, 4)
    assert balanced_pushforward_with_divisor(cc) == generic_pushforward(cc)


def test_cokernel_dual_type():
    assert cokernel_dual_type(T(-3, -3, -3, 0)) == T(3, 3, 3)
    assert cokernel_dual_type(T(-2, -2, -2, -2, 0)) == T(2, 2, 2, 2)
    assert cokernel_dual_type(T(-1, 0)) == T(1)


@pytest.mark.parametrize("exps", [(-3, 0, 0), (-2, 1), (-3, -2), (0,), (-1, 0, 2)])
def test_cokernel_dual_type_precondition(exps):
    with pytest.raises(PreconditionError):
        cokernel_dual_type(T(*exps))


def test_unbalanced_check():
    # cokernel dual (2,4,4) twists to (-1,1,1): degree 1, rejected
    assert not unbalanced_twisted_dual_check(T(-4, -4, -2, 0), 2)
    assert unbalanced_twisted_dual_check(T(-4, -3, -3, -2, 0), 2)
    assert not unbalanced_twisted_dual_check(balanced_pushforward_with_divisor(decompose(5, 7)), 1)
    # two entries of -1: not the witness shape
    assert not unbalanced_twisted_dual_check(T(-4, -2, -2, -2, 0), 2)


@pytest.mark.parametrize(
    "d, g, expected",
    [(3, 5, False), (4, 5, False), (5, 11, True), (4, 4, False), (2, 9, False), (6, 5, False)],
)
def test_gate(d, g, expected):
    assert divisorial_gate(d, g) is expected
    assert (gate_reason(d, g) is None) is expected


def test_gate_reason_names_exclusion():
    assert gate_reason(3, 5) == "(d,g) = (3,5) excluded"
    assert "2d-3" in gate_reason(4, 5)
    assert "2d-4" in gate_reason(5, 6)


@pytest.mark.parametrize(
    "d, g, steps, residual",
    [(4, 6, (0,), 2), (5, 7, (3, 2, 1, 0), 7), (6, 11, (1, 0), 8)],
)
def test_greedy_trajectory(d, g, steps, residual):
    traj = greedy_trajectory(decompose(d, g))
    assert traj.steps == steps
    assert traj.residual_degree == residual


def test_case1_pushforward():
    cc = decompose(7, 13)  # k=2, s=1 <= d-4
    t = special_pushforward_case1(cc)
    assert t == T(-4, -4, -3, -3, -3, -2, 0)
    assert t.degree() == 1 - cc.g - cc.d
    tw = twist(t, cc.k)
    assert (h0(tw), h1(tw)) == (cc.k + 2, cc.s + 1)
    with pytest.raises(DomainError):
        special_pushforward_case1(decompose(5, 10))


def test_sweep_invariants():
    for cc in sweep(8, 40):
        gp = generic_pushforward(cc)
        bp = balanced_pushforward_with_divisor(cc)
        assert twisted_section_counts(cc, cc.k) == (cc.k + 1, cc.s)
        assert gp.degree() == 1 - cc.g - cc.d
        assert bp.degree() == cc.s + 1 - cc.g - cc.d
        coker = cokernel_dual_type(bp)
        assert coker == SplittingType((cc.k + 1,) * (cc.d - 1))
        assert is_trivial_type(twist(coker, -(cc.k + 1)))
        traj = greedy_trajectory(cc)
        assert traj.steps == tuple(range(cc.s, -1, -1))
        assert cc.b - traj.residual_degree == (cc.k + 2) * cc.d
        if cc.s <= cc.d - 4:
            t = twist(special_pushforward_case1(cc), cc.k)
            assert (h0(t), h1(t)) == (cc.k + 2, cc.s + 1)


def test_gate_matches_lemma_exclusions():
    for cc in sweep(12, 40):
        d, g = cc.d, cc.g
        lemma_excluded = (cc.s == d - 3 and g == 2 * (d - 2)) or (
            cc.s == d - 2 and (g == 2 * d - 3 or (d, g) == (3, 5))
        )
        assert divisorial_gate(d, g) is not lemma_excluded
