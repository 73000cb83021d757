from fractions import Fraction

import pytest
from hypothesis import strategies as st

from opialcheck import Interval, IntervalSequence


def iv(lo, hi=None):
    if hi is None:
        hi = lo
    return Interval(lo, hi)


def seq(pairs, base=0):
    return IntervalSequence.from_pairs(pairs, base)


def rseq(values, base=0):
    return IntervalSequence.from_reals(values, base)


# rationals with small denominators keep exact arithmetic fast under powers
def rationals(max_num=50, max_den=8):
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def intervals(max_num=50, max_den=8):
    return st.builds(
        lambda a, b: Interval(min(a, b), max(a, b)),
        rationals(max_num, max_den),
        rationals(max_num, max_den),
    )


@pytest.fixture
def ex33():
    """The bundled up-then-down worked sequence."""
    return seq([(0, 0), (1, 2), (2, 4), (3, 6), (1, 2), (0, 0)])


@pytest.fixture
def ex32_n5():
    return seq(
        [(1, 2), (Fraction(1, 2), 1), (Fraction(1, 3), Fraction(2, 3)),
         (Fraction(1, 4), Fraction(1, 2)), (0, 0)],
        base=1,
    )
