"""Small hand-built instances shared by several test modules."""

from superstable import Instance, PartitionMatroid, UniformMatroid, WeakOrder

# elements: 0 = m1w1, 1 = m1w2, 2 = m2w1, 3 = m2w2
MEN = PartitionMatroid(4, ((0, 1), (2, 3)), (1, 1))
WOMEN = PartitionMatroid(4, ((0, 2), (1, 3)), (1, 1))


def smti_2x2(ranks_d, ranks_h):
    return Instance(4, MEN, WOMEN, WeakOrder(tuple(ranks_d), "D"),
                    WeakOrder(tuple(ranks_h), "H"))


ALL_TIED = smti_2x2((0, 0, 0, 0), (0, 0, 0, 0))
STRICT = smti_2x2((1, 2, 3, 4), (1, 2, 3, 4))

EMPTY = Instance(0, UniformMatroid(0, 0), UniformMatroid(0, 0), WeakOrder(()),
                 WeakOrder((), "H"))


def two_element(m_d, m_h, ranks_d, ranks_h):
    return Instance(2, m_d, m_h, WeakOrder(ranks_d, "D"), WeakOrder(ranks_h, "H"))

# one PASS/FAIL line per acceptance criterion, echoed in the pytest summary
ACCEPTANCE_LINES: list[str] = []
