"""Problem instances, the super-stability test, and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InputError, PreconditionError
from .matroids import CachedMatroid, Matroid
from .preferences import WeakOrder

__all__ = [
    "Instance",
    "StabilityReport",
    "dom",
    "block_h",
    "is_super_stable",
    "brute_force_all",
    "BRUTE_FORCE_LIMIT",
]

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class Instance:
    """Ground set ``0..size-1``, two matroids on it, and two weak orders.

    Construction validates that both matroids live on the ground set, both
    orders rank every element, and every singleton is independent on both
    sides (loops are rejected rather than silently removed).
    """

    size: int
    m_d: Matroid
    m_h: Matroid
    order_d: WeakOrder
    order_h: WeakOrder

    def __post_init__(self):
        ground = frozenset(range(self.size))
        for name, m in (("D", self.m_d), ("H", self.m_h)):
            if m.ground != ground:
                raise InputError(f"matroid {name} is not on the ground set 0..{self.size - 1}")
        for name, o in (("D", self.order_d), ("H", self.order_h)):
            if len(o) != self.size:
                raise InputError(f"order {name} ranks {len(o)} elements, expected {self.size}")
        for e in range(self.size):
            if not self.m_d.is_independent({e}):
                raise InputError(f"element {e} is a loop of matroid D (singleton dependent)")
            if not self.m_h.is_independent({e}):
                raise InputError(f"element {e} is a loop of matroid H (singleton dependent)")

    @property
    def ground(self) -> frozenset:
        return frozenset(range(self.size))

    def matroid(self, side: str) -> Matroid:
        return {"D": self.m_d, "H": self.m_h}[side]

    def order(self, side: str) -> WeakOrder:
        return {"D": self.order_d, "H": self.order_h}[side]

    def with_oracles(self, m_d: Matroid, m_h: Matroid) -> Instance:
        """Same instance answered by other oracles on the same ground set.

        Used to wrap the matroids (counting, caching) without re-validating.
        """
        clone = object.__new__(Instance)
        for name, value in (("size", self.size), ("m_d", m_d), ("m_h", m_h),
                            ("order_d", self.order_d), ("order_h", self.order_h)):
            object.__setattr__(clone, name, value)
        return clone

    def cached(self) -> Instance:
        return self.with_oracles(CachedMatroid(self.m_d), CachedMatroid(self.m_h))


def dom(inst: Instance, side: str, items: Iterable[int]) -> frozenset:
    """Spanned elements whose every fundamental-circuit partner is strictly better."""
    m, order = inst.matroid(side), inst.order(side)
    items = frozenset(items)
    spanned = m.span(items)
    return frozenset(
        e for e in spanned
        if all(order.strictly_prefers(f, e)
               for f in m.fundamental_circuit_minus(e, items, check=False)))


def block_h(inst: Instance, items: Iterable[int],
            candidates: Iterable[int] | None = None) -> frozenset:
    """Spanned elements (on the H side) tied with or better than some circuit partner.

    ``candidates`` restricts which elements are examined.
    """
    m, order = inst.m_h, inst.order_h
    items = m._require_independent(items)
    pool = inst.ground - items if candidates is None else frozenset(candidates) - items
    out = []
    for e in pool:
        if m._independent(items | {e}):
            continue
        partners = m.fundamental_circuit_minus(e, items, check=False)
        if any(order.weakly_prefers(e, f) for f in partners):
            out.append(e)
    return frozenset(out)


@dataclass(frozen=True)
class StabilityReport:
    """Result of :func:`is_super_stable`; truthy iff stable.

    On failure exactly one of ``dependent_in`` (``"M_D"``/``"M_H"``) or
    ``blocking_element`` is set.
    """

    stable: bool
    dependent_in: str | None = None
    blocking_element: int | None = None

    def __bool__(self) -> bool:
        return self.stable

    @property
    def witness(self) -> str | int | None:
        return self.dependent_in if self.dependent_in is not None else self.blocking_element


def is_super_stable(inst: Instance, items: Iterable[int]) -> StabilityReport:
    items = frozenset(items)
    if not items <= inst.ground:
        raise InputError(f"element ids {sorted(items - inst.ground)} out of range")
    if not inst.m_d.is_independent(items):
        return StabilityReport(False, dependent_in="M_D")
    if not inst.m_h.is_independent(items):
        return StabilityReport(False, dependent_in="M_H")
    covered = dom(inst, "D", items) | dom(inst, "H", items)
    outside = inst.ground - items
    if covered == outside:
        return StabilityReport(True)
    return StabilityReport(False, blocking_element=min(outside - covered))


def _subsets(size: int):
    ground = range(size)
    for k in range(size + 1):
        for combo in combinations(ground, k):
            yield frozenset(combo)


def brute_force_all(inst: Instance, limit: int = BRUTE_FORCE_LIMIT) -> list[frozenset]:
    """Every super-stable common independent set, by trying all subsets.

    Sets come out by increasing size, then lexicographically by sorted ids.
    Refuses instances with more than ``limit`` elements.
    """
    if inst.size > limit:
        raise PreconditionError(
            f"brute force refused: {inst.size} elements exceeds the limit of {limit}")
    fast = inst.cached()
    found = []
    for items in _subsets(inst.size):
        if fast.m_d._independent(items) and fast.m_h._independent(items):
            if is_super_stable(fast, items):
                found.append(items)
    return found
