"""Super-stable common independent sets of two matroids with tied preferences.

:func:`ch_d` and :func:`ch_h` are the two choice functions; :func:`solve`
alternates them, collecting rejected elements until a fixed point, and
then either returns a super-stable common independent set or reports
that none exists.

The free choices (which element Ch_H processes next, which blocking
element the repair loop picks) follow a priority ``order`` over element
ids; ascending ids by default.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvariantError
from .matroids import CountingMatroid, Matroid, contract
from .stability import Instance, block_h

__all__ = [
    "ChDTrace",
    "ChHTrace",
    "RepairStep",
    "Round",
    "SolveOutcome",
    "ch_d",
    "ch_h",
    "solve",
]


@dataclass
class ChDTrace:
    """``levels`` holds one ``(band, picked)`` pair per iteration."""

    levels: list[tuple[frozenset, frozenset]]
    output: frozenset

    @property
    def level_count(self) -> int:
        return len(self.levels)


@dataclass
class ChHTrace:
    """``steps`` holds ``(element, removed)``; ``removed`` is None when nothing was spanned."""

    steps: list[tuple[int, frozenset | None]]
    output: frozenset


@dataclass
class RepairStep:
    blocker: int
    removed: frozenset
    kept: frozenset
    rejected: frozenset


@dataclass
class Round:
    """One outer iteration: the choice phase and the repair phase."""

    index: int
    choices: list[tuple[frozenset, frozenset]] = field(default_factory=list)  # (J, Q) per step
    repairs: list[RepairStep] = field(default_factory=list)
    kept: frozenset = frozenset()
    rejected: frozenset = frozenset()


@dataclass
class SolveOutcome:
    """Verdict of :func:`solve` plus the execution trace.

    ``reason`` is None when a set was found, else ``"dependent_in_D"`` or
    ``"augmentable_from_R"`` (with ``augmenting_element`` set).
    """

    found: bool
    solution: frozenset | None
    reason: str | None
    augmenting_element: int | None
    rejected: frozenset
    rounds: list[Round]
    oracle_calls: int

    @property
    def k(self) -> int:
        return len(self.rounds)

    @property
    def choice_iterations(self) -> list[int]:
        return [len(r.choices) for r in self.rounds]

    @property
    def repair_iterations(self) -> list[int]:
        return [len(r.repairs) for r in self.rounds]

    def rejected_history(self) -> list[frozenset]:
        return [frozenset()] + [r.rejected for r in self.rounds]

    def to_dict(self, trace: bool = False) -> dict:
        out = {
            "verdict": "found" if self.found else "none",
            "set": sorted(self.solution) if self.solution is not None else None,
            "reason": self.reason,
            "rejected": sorted(self.rejected),
            "counters": {"k": self.k, "i_t": self.choice_iterations,
                         "j_t": self.repair_iterations},
            "oracleCalls": self.oracle_calls,
        }
        if self.augmenting_element is not None:
            out["e_R"] = self.augmenting_element
        if trace:
            out["trace"] = trace_records(self)
        return out


def trace_records(outcome: SolveOutcome) -> list[dict]:
    """Flat list of per-iteration records, suitable for line-delimited logging."""
    records = []
    for rnd in outcome.rounds:
        for i, (j_set, q_set) in enumerate(rnd.choices, 1):
            records.append({"t": rnd.index, "phase": "choice", "i": i,
                            "J": sorted(j_set), "Q": sorted(q_set)})
        for j, step in enumerate(rnd.repairs, 1):
            records.append({"t": rnd.index, "phase": "repair", "j": j, "b": step.blocker,
                            "removed": sorted(step.removed), "T": sorted(step.kept),
                            "S": sorted(step.rejected)})
        records.append({"t": rnd.index, "phase": "round", "I": sorted(rnd.kept),
                        "R": sorted(rnd.rejected)})
    return records


def _priority(order: Sequence[int] | None, size: int) -> dict[int, int]:
    if order is None:
        return {e: e for e in range(size)}
    pos = {e: i for i, e in enumerate(order)}
    if sorted(pos) != list(range(size)):
        raise ValueError("order must be a permutation of the element ids")
    return pos


def ch_d(inst: Instance, subset: Iterable[int]) -> ChDTrace:
    """Peel off best bands of ``subset`` under the D order.

    From each band keep the elements that are still independent singletons
    in the running contraction, then contract the *whole* band.  The output
    contains a base of ``M_D | subset`` but may itself be dependent.
    """
    remaining = frozenset(subset)
    running: Matroid = inst.m_d
    chosen: frozenset = frozenset()
    levels = []
    for band in inst.order_d.bands(remaining):
        picked = frozenset(e for e in band if running._independent(frozenset((e,))))
        chosen |= picked
        levels.append((band, picked))
        running = contract(running, band)
    return ChDTrace(levels, chosen)


def ch_h(inst: Instance, subset: Iterable[int],
         order: Sequence[int] | None = None) -> ChHTrace:
    """Insert elements one at a time, evicting the worst band of any circuit closed.

    The eviction can include the inserted element itself.  The output is
    always independent in ``M_H``.
    """
    m_h = inst.m_h
    prio = _priority(order, inst.size)
    kept: frozenset = frozenset()
    steps = []
    for e in sorted(subset, key=prio.__getitem__):
        grown = kept | {e}
        if m_h._independent(grown):
            kept = grown
            steps.append((e, None))
        else:
            circuit = m_h.fundamental_circuit(e, kept, check=False)
            removed = inst.order_h.tail(circuit)
            kept = grown - removed
            steps.append((e, removed))
    return ChHTrace(steps, kept)


def solve(inst: Instance, order: Sequence[int] | None = None,
          debug: bool = False) -> SolveOutcome:
    """Find a super-stable common independent set, or certify there is none.

    ``order`` sets the priority used for the algorithm's free choices.
    With ``debug=True`` internal invariants (kept/rejected disjointness,
    monotone rejection) are checked on every step.  Loop counters above
    ``|E| + 1`` raise :class:`InvariantError` regardless of ``debug``.
    """
    m_d, m_h = CountingMatroid(inst.m_d), CountingMatroid(inst.m_h)
    inst = inst.with_oracles(m_d, m_h)
    prio = _priority(order, inst.size)
    ground = inst.ground
    bound = inst.size + 1

    def choose_d(subset):
        return ch_d(inst, subset).output

    def choose_h(subset):
        return ch_h(inst, subset, order).output

    current: frozenset = frozenset()
    rejected: frozenset = frozenset()
    rounds: list[Round] = []

    while current != choose_d(ground - rejected):
        if len(rounds) >= bound:
            raise InvariantError(f"outer loop exceeded {bound} iterations")
        rnd = Round(index=len(rounds) + 1)
        chosen: frozenset = frozenset()
        queue = rejected
        while True:
            proposal = choose_d(ground - queue)
            if chosen == proposal:
                break
            if len(rnd.choices) >= bound:
                raise InvariantError(f"choice loop exceeded {bound} iterations")
            chosen = choose_h(proposal)
            queue = queue | (proposal - chosen)
            rnd.choices.append((chosen, queue))

        kept, refused = chosen, queue
        while True:
            if debug:
                if kept & refused:
                    raise InvariantError("kept and rejected sets intersect")
                if not m_h._independent(kept):
                    raise InvariantError("kept set is dependent in M_H")
            blockers = block_h(inst, kept, candidates=refused) if refused else frozenset()
            if not blockers:
                break
            if len(rnd.repairs) >= bound:
                raise InvariantError(f"repair loop exceeded {bound} iterations")
            b = min(blockers, key=prio.__getitem__)
            removed = inst.order_h.tail(m_h.fundamental_circuit(b, kept, check=False))
            kept = kept - removed
            refused = refused | removed
            rnd.repairs.append(RepairStep(b, removed, kept, refused))

        if debug and not rejected <= refused:
            raise InvariantError("rejected set shrank")
        current, rejected = kept, refused
        rnd.kept, rnd.rejected = kept, refused
        rounds.append(rnd)

    if not m_d._independent(current):
        return SolveOutcome(False, None, "dependent_in_D", None, rejected, rounds,
                            m_d.calls + m_h.calls)
    augmenting = [e for e in rejected if m_h._independent(current | {e})]
    if augmenting:
        e_r = min(augmenting, key=prio.__getitem__)
        return SolveOutcome(False, None, "augmentable_from_R", e_r, rejected, rounds,
                            m_d.calls + m_h.calls)
    return SolveOutcome(True, current, None, None, rejected, rounds, m_d.calls + m_h.calls)
