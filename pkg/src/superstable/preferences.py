"""Weak orders (preferences with ties) stored as integer rank buckets.

A smaller bucket is more preferred; equal buckets are ties.  Storing
buckets makes the relation transitive and complete by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, PreconditionError

__all__ = ["Comparison", "WeakOrder"]


class Comparison(enum.Enum):
    STRICTLY_PREFERS = "strictly_prefers"
    TIED = "tied"
    STRICTLY_DISPREFERRED = "strictly_dispreferred"


@dataclass(frozen=True)
class WeakOrder:
    """Preference of one side (``"D"`` or ``"H"``) over elements ``0..n-1``."""

    ranks: tuple[int, ...]
    side: str = "D"

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if self.side not in ("D", "H"):
            raise InputError(f"weak order side must be 'D' or 'H', got {self.side!r}")

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]], side: str = "D") -> WeakOrder:
        """Build from ``(element, rank)`` pairs; every element needs exactly one."""
        ranks: list[int | None] = [None] * size
        for e, r in pairs:
            if not 0 <= e < size:
                raise InputError(f"weak order: element id {e} out of range")
            if ranks[e] is not None:
                raise InputError(f"weak order: element {e} ranked twice")
            ranks[e] = r
        missing = [e for e, r in enumerate(ranks) if r is None]
        if missing:
            raise InputError(f"weak order: elements {missing} have no rank")
        return cls(tuple(ranks), side)

    def __len__(self) -> int:
        return len(self.ranks)

    def rank_of(self, e: int) -> int:
        return self.ranks[e]

    def prefers(self, e: int, f: int) -> Comparison:
        re, rf = self.ranks[e], self.ranks[f]
        if re < rf:
            return Comparison.STRICTLY_PREFERS
        if re == rf:
            return Comparison.TIED
        return Comparison.STRICTLY_DISPREFERRED

    def weakly_prefers(self, e: int, f: int) -> bool:
        """``e`` is at least as good as ``f``."""
        return self.ranks[e] <= self.ranks[f]

    def strictly_prefers(self, e: int, f: int) -> bool:
        return self.ranks[e] < self.ranks[f]

    def head(self, items: Iterable[int]) -> frozenset:
        """Most preferred band of a nonempty set."""
        items = frozenset(items)
        if not items:
            raise PreconditionError("head of an empty set")
        best = min(self.ranks[e] for e in items)
        return frozenset(e for e in items if self.ranks[e] == best)

    def tail(self, items: Iterable[int]) -> frozenset:
        """Least preferred band of a nonempty set."""
        items = frozenset(items)
        if not items:
            raise PreconditionError("tail of an empty set")
        worst = max(self.ranks[e] for e in items)
        return frozenset(e for e in items if self.ranks[e] == worst)

    def is_strict(self) -> bool:
        return len(set(self.ranks)) == len(self.ranks)

    def bands(self, items: Iterable[int] | None = None) -> list[frozenset]:
        """Split ``items`` (default: all) into tie bands, best first."""
        items = range(len(self.ranks)) if items is None else items
        by_rank: dict[int, set[int]] = {}
        for e in items:
            by_rank.setdefault(self.ranks[e], set()).add(e)
        return [frozenset(by_rank[r]) for r in sorted(by_rank)]
