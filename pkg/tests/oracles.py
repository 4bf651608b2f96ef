"""Independent brute-force oracles used by the tests.

Nothing here calls the library's derived queries (span, circuits, bases);
only raw independence answers are used, and everything else is found by
exhaustive enumeration.
"""

from itertools import combinations, product


def subsets(items):
    items = sorted(items)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def brute_rank(m, subset):
    return max(len(s) for s in subsets(subset) if m.is_independent(s))


def all_circuits(m):
    """Minimal dependent sets, by enumeration."""
    dependent = [s for s in subsets(m.ground) if not m.is_independent(s)]
    return [c for c in dependent if all(m.is_independent(c - {x}) for x in c)]


def circuit_inside(m, items):
    """The circuits contained in ``items``."""
    return [c for c in all_circuits(m) if c <= items]


def forest_by_dfs(num_vertices, edges):
    """True iff the multigraph has no cycle, via component counting."""
    adj = {v: [] for v in range(num_vertices)}
    for i, (u, v) in enumerate(edges):
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    seen, components = set(), 0
    for v in range(num_vertices):
        if v in seen:
            continue
        components += 1
        stack = [v]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x])
    return len(edges) == num_vertices - components


def columns_independent_by_enumeration(columns, p):
    """No nontrivial GF(p) combination of the columns vanishes."""
    if not columns:
        return True
    rows = len(columns[0])
    for coeffs in product(range(p), repeat=len(columns)):
        if not any(coeffs):
            continue
        if all(sum(c * col[r] for c, col in zip(coeffs, columns)) % p == 0
               for r in range(rows)):
            return False
    return True


def super_stable_by_definition(inst, items):
    """Super-stability straight from circuits, without fundamental-circuit formulas."""
    items = frozenset(items)
    if not (inst.m_d.is_independent(items) and inst.m_h.is_independent(items)):
        return False
    for e in inst.ground - items:
        dominated = False
        for m, order in ((inst.m_d, inst.order_d), (inst.m_h, inst.order_h)):
            if m.is_independent(items | {e}):
                continue
            (circuit,) = circuit_inside(m, items | {e})
            if all(order.strictly_prefers(f, e) for f in circuit - {e}):
                dominated = True
        if not dominated:
            return False
    return True


def ordered_partitions(items):
    """All ordered set partitions of ``items`` (lists of frozensets)."""
    items = list(items)
    if not items:
        yield []
        return
    for k in range(1, len(items) + 1):
        for first in combinations(items, k):
            rest = [x for x in items if x not in first]
            for tail in ordered_partitions(rest):
                yield [frozenset(first)] + tail


class SubsetTable:
    """Independence, rank and circuits of every subset of ``range(size)``, keyed by bitmask.

    Ranks come from a subset DP over raw independence answers, so they do
    not depend on the library's greedy base search.
    """

    def __init__(self, m, size):
        self.size = size
        full = 1 << size
        self.independent = [m.is_independent(self.to_set(x)) for x in range(full)]
        self.rank = [0] * full
        for x in range(1, full):
            if self.independent[x]:
                self.rank[x] = bin(x).count("1")
            else:
                self.rank[x] = max(self.rank[x & ~(1 << i)] for i in range(size) if x >> i & 1)
        self.circuits = [x for x in range(full) if not self.independent[x]
                         and all(self.independent[x & ~(1 << i)]
                                 for i in range(size) if x >> i & 1)]

    def to_set(self, mask):
        return frozenset(i for i in range(self.size) if mask >> i & 1)

    @staticmethod
    def to_mask(items):
        return sum(1 << i for i in items)
