"""Matroids given by independence oracles, their minors, and derived queries.

Every matroid here lives on a ground set of dense integer ids.  Concrete
matroids (:class:`UniformMatroid`, :class:`PartitionMatroid`,
:class:`LaminarMatroid`, :class:`GraphicMatroid`, :class:`LinearMatroid`)
answer independence directly; :class:`MinorView` answers it for a
restriction/contraction of another matroid.  Everything else (rank, span,
fundamental circuits, bases) is derived from the independence oracle in
:class:`Matroid`.

Subsets of the ground set are plain ``frozenset`` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError

ElementSet = frozenset

__all__ = [
    "ElementSet",
    "Matroid",
    "UniformMatroid",
    "PartitionMatroid",
    "LaminarMatroid",
    "GraphicMatroid",
    "LinearMatroid",
    "MinorView",
    "CountingMatroid",
    "CachedMatroid",
    "restrict",
    "contract",
    "chain_base",
]


class Matroid:
    """Independence-oracle interface plus the queries derived from it.

    Subclasses provide :attr:`ground` and :meth:`_independent`.  The public
    :meth:`is_independent` checks that the queried set lies inside the
    ground set before delegating.
    """

    @property
    def ground(self) -> frozenset:
        raise NotImplementedError

    def _independent(self, items: frozenset) -> bool:
        raise NotImplementedError

    def _as_subset(self, items: Iterable[int]) -> frozenset:
        items = items if isinstance(items, frozenset) else frozenset(items)
        if not items <= self.ground:
            bad = sorted(items - self.ground)
            raise InputError(f"element ids {bad} are not in the ground set")
        return items

    def is_independent(self, items: Iterable[int]) -> bool:
        return self._independent(self._as_subset(items))

    def find_base(self, subset: Iterable[int] | None = None,
                  order: Sequence[int] | None = None) -> frozenset:
        """Greedy maximal independent subset of ``subset`` (default: ground).

        Elements are scanned in ascending id order unless ``order`` is given;
        ``order`` must then list every element of ``subset``.
        """
        subset = self.ground if subset is None else self._as_subset(subset)
        if order is None:
            scan = sorted(subset)
        else:
            scan = [e for e in order if e in subset]
            if len(set(scan)) != len(subset):
                raise PreconditionError("order does not enumerate every element of the subset")
        base: frozenset = frozenset()
        for e in scan:
            candidate = base | {e}
            if self._independent(candidate):
                base = candidate
        return base

    def rank(self, subset: Iterable[int] | None = None) -> int:
        return len(self.find_base(subset))

    def _require_independent(self, items: Iterable[int]) -> frozenset:
        items = self._as_subset(items)
        if not self._independent(items):
            raise PreconditionError(f"set {sorted(items)} is dependent")
        return items

    def span(self, independent: Iterable[int]) -> frozenset:
        """Elements outside an independent set whose addition makes it dependent."""
        independent = self._require_independent(independent)
        return frozenset(u for u in self.ground - independent
                         if not self._independent(independent | {u}))

    def fundamental_circuit(self, u: int, independent: Iterable[int],
                            check: bool = True) -> frozenset:
        """The unique circuit inside ``independent + u``.

        Computed with one oracle call per member of ``independent + u``:
        ``f`` is on the circuit iff dropping it restores independence.
        """
        if check:
            independent = self._require_independent(independent)
            if u not in self.ground:
                raise InputError(f"element id {u} is not in the ground set")
            if u in independent or self._independent(independent | {u}):
                raise PreconditionError(f"element {u} is not spanned by {sorted(independent)}")
        extended = independent | {u}
        return frozenset(f for f in extended if f == u or self._independent(extended - {f}))

    def fundamental_circuit_minus(self, u: int, independent: Iterable[int],
                                  check: bool = True) -> frozenset:
        return self.fundamental_circuit(u, independent, check) - {u}

    def restrict(self, subset: Iterable[int]) -> MinorView:
        return restrict(self, subset)

    def contract(self, subset: Iterable[int]) -> MinorView:
        return contract(self, subset)


def _check_ids(ids: Iterable[int], size: int, what: str) -> None:
    for e in ids:
        if not isinstance(e, int) or not 0 <= e < size:
            raise InputError(f"{what}: element id {e!r} out of range 0..{size - 1}")


@dataclass(frozen=True)
class UniformMatroid(Matroid):
    """Every set of at most ``k`` elements is independent."""

    size: int
    k: int

    def __post_init__(self):
        if self.size < 0 or self.k < 0:
            raise InputError("uniform matroid needs non-negative size and rank")

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(range(self.size))

    def _independent(self, items: frozenset) -> bool:
        return len(items) <= self.k


@dataclass(frozen=True)
class PartitionMatroid(Matroid):
    """Disjoint blocks, each with a capacity.

    A set is independent when it meets every block in at most the block's
    capacity.  Elements covered by no block are unconstrained.
    """

    size: int
    blocks: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "capacities", tuple(self.capacities))
        if len(self.blocks) != len(self.capacities):
            raise InputError("partition matroid: one capacity per block required")
        seen: set[int] = set()
        for block, cap in zip(self.blocks, self.capacities):
            _check_ids(block, self.size, "partition matroid")
            if cap < 0:
                raise InputError("partition matroid: negative capacity")
            if seen & set(block) or len(set(block)) != len(block):
                raise InputError("partition matroid: blocks must be disjoint")
            seen.update(block)

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(range(self.size))

    @cached_property
    def _block_of(self) -> dict[int, int]:
        return {e: i for i, block in enumerate(self.blocks) for e in block}

    def _independent(self, items: frozenset) -> bool:
        used = [0] * len(self.blocks)
        block_of = self._block_of
        for e in items:
            b = block_of.get(e)
            if b is not None:
                used[b] += 1
                if used[b] > self.capacities[b]:
                    return False
        return True


@dataclass(frozen=True)
class LaminarMatroid(Matroid):
    """Capacities on a laminar family: any two sets are disjoint or nested."""

    size: int
    sets: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(tuple(sorted(s)) for s in self.sets))
        object.__setattr__(self, "capacities", tuple(self.capacities))
        if len(self.sets) != len(self.capacities):
            raise InputError("laminar matroid: one capacity per set required")
        for s, cap in zip(self.sets, self.capacities):
            _check_ids(s, self.size, "laminar matroid")
            if cap < 0:
                raise InputError("laminar matroid: negative capacity")
            if len(set(s)) != len(s):
                raise InputError("laminar matroid: repeated element in a set")
        as_sets = [frozenset(s) for s in self.sets]
        for i, a in enumerate(as_sets):
            for b in as_sets[i + 1:]:
                if a & b and not (a <= b or b <= a):
                    raise InputError(
                        f"laminar matroid: sets {sorted(a)} and {sorted(b)} cross")

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(range(self.size))

    @cached_property
    def _frozen_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(s) for s in self.sets)

    def _independent(self, items: frozenset) -> bool:
        return all(len(items & s) <= cap
                   for s, cap in zip(self._frozen_sets, self.capacities))


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


@dataclass(frozen=True)
class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``.

    Independent sets are forests.  A self-loop edge is a loop of the matroid.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InputError(f"graphic matroid: edge ({u}, {v}) has an unknown vertex")

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(range(len(self.edges)))

    def _independent(self, items: frozenset) -> bool:
        dsu = _DisjointSets(self.num_vertices)
        return all(dsu.union(*self.edges[e]) for e in items)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p), by exact Gaussian elimination."""
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


@dataclass(frozen=True)
class LinearMatroid(Matroid):
    """Column matroid of a matrix over the prime field GF(p).

    ``matrix`` is a tuple of rows; element ``j`` is column ``j``.
    """

    matrix: tuple[tuple[int, ...], ...]
    prime: int
    num_columns: int | None = None

    def __post_init__(self):
        if not _is_prime(self.prime) or self.prime >= 2 ** 16:
            raise InputError(f"linear matroid: {self.prime} is not a prime below 2^16")
        rows = tuple(tuple(int(x) % self.prime for x in row) for row in self.matrix)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise InputError("linear matroid: rows have different lengths")
        if rows:
            ncols = widths.pop()
            if self.num_columns is not None and self.num_columns != ncols:
                raise InputError("linear matroid: column count does not match matrix")
        elif self.num_columns is None:
            ncols = 0
        else:
            # zero rows: every column is the zero vector
            ncols = self.num_columns
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "num_columns", ncols)

    @property
    def size(self) -> int:
        return self.num_columns

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(range(self.num_columns))

    def _independent(self, items: frozenset) -> bool:
        if not items:
            return True
        if len(items) > len(self.matrix):
            return False
        cols = sorted(items)
        # rank of the column submatrix equals rank of its transpose
        vectors = [[row[c] for row in self.matrix] for c in cols]
        return rank_mod_p(vectors, self.prime) == len(cols)


class MinorView(Matroid):
    """Restriction/contraction of another matroid, created in O(|contracted|).

    The view deletes ``deleted`` and contracts ``contracted``.  A set ``I``
    in the remaining ground set is independent iff ``I`` together with a
    fixed base of ``base|contracted`` is independent in ``base``.  Views
    may be stacked: ``base`` can itself be a view.
    """

    def __init__(self, base: Matroid, deleted: Iterable[int] = (),
                 contracted: Iterable[int] = ()):
        deleted = base._as_subset(deleted)
        contracted = base._as_subset(contracted)
        if deleted & contracted:
            raise PreconditionError("deleted and contracted sets overlap")
        self.base = base
        self.deleted = deleted
        self.contracted = contracted
        self.contracted_base = base.find_base(contracted) if contracted else frozenset()
        self._ground = base.ground - deleted - contracted

    @property
    def ground(self) -> frozenset:
        return self._ground

    def _independent(self, items: frozenset) -> bool:
        return self.base._independent(items | self.contracted_base)

    def __repr__(self) -> str:
        return (f"MinorView({self.base!r}, deleted={sorted(self.deleted)}, "
                f"contracted={sorted(self.contracted)})")


def restrict(m: Matroid, subset: Iterable[int]) -> MinorView:
    """``m|subset``."""
    subset = m._as_subset(subset)
    return MinorView(m, deleted=m.ground - subset)


def contract(m: Matroid, subset: Iterable[int]) -> MinorView:
    """``m/subset``; a base of ``m|subset`` is found once, ascending id order."""
    return MinorView(m, contracted=subset)


def chain_base(m: Matroid, partition: Sequence[Iterable[int]]) -> frozenset:
    """Base whose trace on every prefix union of ``partition`` is a base there.

    Takes a base of each block in the running contraction, then contracts
    the whole block before moving on.
    """
    blocks = [m._as_subset(b) for b in partition]
    seen: frozenset = frozenset()
    for b in blocks:
        if seen & b:
            raise InputError("chain_base: blocks overlap")
        seen |= b
    if seen != m.ground:
        raise InputError("chain_base: blocks do not cover the ground set")
    current: Matroid = m
    result: frozenset = frozenset()
    for b in blocks:
        result |= current.find_base(b)
        current = contract(current, b)
    return result


class CountingMatroid(Matroid):
    """Wraps a matroid and counts independence queries."""

    def __init__(self, inner: Matroid):
        self.inner = inner
        self.calls = 0

    @property
    def ground(self) -> frozenset:
        return self.inner.ground

    def _independent(self, items: frozenset) -> bool:
        self.calls += 1
        return self.inner._independent(items)


class CachedMatroid(Matroid):
    """Memoizes independence answers; meant for exhaustive checks."""

    def __init__(self, inner: Matroid):
        self.inner = inner
        self._cache: dict[frozenset, bool] = {}

    @property
    def ground(self) -> frozenset:
        return self.inner.ground

    def _independent(self, items: frozenset) -> bool:
        hit = self._cache.get(items)
        if hit is None:
            hit = self._cache[items] = self.inner._independent(items)
        return hit
