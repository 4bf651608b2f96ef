import pytest
from hypothesis import given, strategies as st

from superstable import Comparison, InputError, PreconditionError, WeakOrder

ranks = st.lists(st.integers(0, 4), min_size=1, max_size=8)


def test_prefers_three_way():
    o = WeakOrder((1, 2, 1, 3))
    assert o.prefers(0, 1) is Comparison.STRICTLY_PREFERS
    assert o.prefers(0, 2) is Comparison.TIED
    assert o.prefers(3, 0) is Comparison.STRICTLY_DISPREFERRED


def test_head_and_tail_examples():
    o = WeakOrder((1, 1, 2))
    assert o.head({2}) == {2}
    assert o.head({0, 1, 2}) == {0, 1}
    assert WeakOrder((2, 3)).head({0, 1}) == {0}
    assert WeakOrder((1, 2, 2)).tail({0, 1, 2}) == {1, 2}
    assert WeakOrder((5, 5, 5)).tail({0, 1, 2}) == {0, 1, 2}
    assert o.tail({1}) == {1}


def test_empty_head_tail_rejected():
    o = WeakOrder((1,))
    with pytest.raises(PreconditionError):
        o.head(set())
    with pytest.raises(PreconditionError):
        o.tail(set())


def test_from_pairs_requires_totality():
    assert WeakOrder.from_pairs(3, [(2, 7), (0, 1), (1, 1)]).ranks == (1, 1, 7)
    with pytest.raises(InputError):
        WeakOrder.from_pairs(3, [(0, 1), (1, 1)])
    with pytest.raises(InputError):
        WeakOrder.from_pairs(2, [(0, 1), (0, 2), (1, 1)])


def test_bands_are_best_first():
    assert WeakOrder((3, 1, 3, 0)).bands() == [{3}, {1}, {0, 2}]
    assert WeakOrder((3, 1, 3, 0)).bands({0, 1, 2}) == [{1}, {0, 2}]


@given(ranks, st.data())
def test_head_tail_properties(rs, data):
    o = WeakOrder(tuple(rs))
    items = data.draw(st.sets(st.integers(0, len(rs) - 1), min_size=1))
    head, tail = o.head(items), o.tail(items)
    assert head and tail and head <= items and tail <= items
    assert all(o.weakly_prefers(e, f) for e in head for f in items)
    assert all(o.weakly_prefers(f, e) for e in tail for f in items)
    if o.is_strict():
        assert len(head) == len(tail) == 1
