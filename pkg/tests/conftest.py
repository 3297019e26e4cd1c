import itertools

import pytest

from hurwitz_divisors.coverclass import decompose


def sweep(d_max, g_max):
    for d in range(3, d_max + 1):
        for g in range(d, g_max + 1):
            yield decompose(d, g)


def naive_acceptable(cc, condition3="gap"):
    """Every integer tuple in the condition-(1)/(2) box, filtered by the definition.

    Deliberately independent of the library: bounds come from a linear scan
    with exact fractions, tuples from the full Cartesian product.
    """
    from fractions import Fraction

    d, b = cc.d, cc.b
    lower = Fraction(b, d * (d - 1))
    upper = Fraction(b, d)
    values = [v for v in range(0, b + 1) if lower <= v <= upper]
    out = []
    for t in itertools.product(values, repeat=d - 1):
        if list(t) != sorted(t) or sum(t) * 2 != b:
            continue
        a1 = t[0]
        if condition3 == "gap":
            ok = all(t[i + 1] - t[i] <= a1 for i in range(d - 2))
        else:
            ok = all(t[i + 1] - a1 <= a1 for i in range(d - 2))
        if ok:
            out.append(t)
    return sorted(out)


@pytest.fixture
def cc_small():
    return list(sweep(6, 20))
