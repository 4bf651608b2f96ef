"""Student-project allocation with ties, and its reduction to two matroids.

Students, projects and lecturers are numbered from 1, as in the usual
instance files.  A matching is a set of ``(student, project)`` pairs.

The reduction takes the acceptable pairs as ground set; the student side
is a partition matroid (one project per student), the lecturer side a
laminar matroid (project capacities nested inside lecturer capacities).
Preferences across different students (resp. lecturers) are broken by
agent index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import InputError, PreconditionError
from .matroids import LaminarMatroid, PartitionMatroid
from .preferences import WeakOrder
from .stability import Instance

__all__ = [
    "SpaInstance",
    "Reduction",
    "reduce",
    "is_spa_matching",
    "spa_blocks",
    "spa_super_stable",
    "spa_brute_force",
]

Pair = tuple[int, int]


@dataclass(frozen=True)
class SpaInstance:
    """An SPA-ST instance.

    ``student_prefs[s-1]`` lists student ``s``'s acceptable projects as tie
    groups, best first.  ``lecturer_prefs[l-1]`` does the same over
    students.  ``project_lecturer[p-1]`` is the lecturer offering ``p``.
    """

    student_prefs: tuple[tuple[tuple[int, ...], ...], ...]
    lecturer_prefs: tuple[tuple[tuple[int, ...], ...], ...]
    project_lecturer: tuple[int, ...]
    project_caps: tuple[int, ...]
    lecturer_caps: tuple[int, ...]

    def __post_init__(self):
        def freeze(prefs):
            return tuple(tuple(tuple(g) for g in groups) for groups in prefs)

        object.__setattr__(self, "student_prefs", freeze(self.student_prefs))
        object.__setattr__(self, "lecturer_prefs", freeze(self.lecturer_prefs))
        for name in ("project_lecturer", "project_caps", "lecturer_caps"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self._validate()

    def _validate(self):
        q, m = self.n_projects, self.n_lecturers
        if len(self.project_caps) != q:
            raise InputError("one capacity per project required")
        if len(self.lecturer_caps) != m or len(self.lecturer_prefs) != m:
            raise InputError("one capacity and one preference list per lecturer required")
        if any(c < 0 for c in self.project_caps + self.lecturer_caps):
            raise InputError("capacities must be non-negative")
        for p, l in enumerate(self.project_lecturer, 1):
            if not 1 <= l <= m:
                raise InputError(f"project {p} is offered by unknown lecturer {l}")
        for s, groups in enumerate(self.student_prefs, 1):
            flat = [p for g in groups for p in g]
            if len(set(flat)) != len(flat):
                raise InputError(f"student {s} lists a project twice")
            if any(not 1 <= p <= q for p in flat):
                raise InputError(f"student {s} lists an unknown project")
        for l, groups in enumerate(self.lecturer_prefs, 1):
            flat = [s for g in groups for s in g]
            if len(set(flat)) != len(flat):
                raise InputError(f"lecturer {l} lists a student twice")
            if any(not 1 <= s <= self.n_students for s in flat):
                raise InputError(f"lecturer {l} lists an unknown student")
        for s, p in self.pairs:
            if s not in self.lecturer_rank[self.project_lecturer[p - 1]]:
                raise InputError(
                    f"student {s} finds project {p} acceptable but lecturer "
                    f"{self.project_lecturer[p - 1]} does not rank them")

    @property
    def n_students(self) -> int:
        return len(self.student_prefs)

    @property
    def n_projects(self) -> int:
        return len(self.project_lecturer)

    @property
    def n_lecturers(self) -> int:
        return len(self.lecturer_caps)

    @cached_property
    def pairs(self) -> tuple[Pair, ...]:
        """Acceptable pairs, sorted by student then project."""
        return tuple(sorted((s, p) for s, groups in enumerate(self.student_prefs, 1)
                            for g in groups for p in g))

    @cached_property
    def pair_set(self) -> frozenset:
        return frozenset(self.pairs)

    @cached_property
    def student_rank(self) -> dict[Pair, int]:
        return {(s, p): i for s, groups in enumerate(self.student_prefs, 1)
                for i, g in enumerate(groups) for p in g}

    @cached_property
    def lecturer_rank(self) -> dict[int, dict[int, int]]:
        return {l: {s: i for i, g in enumerate(groups) for s in g}
                for l, groups in enumerate(self.lecturer_prefs, 1)}

    def lecturer_of(self, p: int) -> int:
        return self.project_lecturer[p - 1]


@dataclass(frozen=True)
class Reduction:
    """The two-matroid instance plus the pair <-> element id correspondence."""

    instance: Instance
    pairs: tuple[Pair, ...]

    @cached_property
    def element_of(self) -> dict[Pair, int]:
        return {pair: e for e, pair in enumerate(self.pairs)}

    def to_elements(self, matching: Iterable[Pair]) -> frozenset:
        try:
            return frozenset(self.element_of[tuple(pair)] for pair in matching)
        except KeyError as exc:
            raise InputError(f"pair {exc.args[0]} is not acceptable") from None

    def to_pairs(self, elements: Iterable[int]) -> frozenset:
        return frozenset(self.pairs[e] for e in elements)


def _dense(keys: list) -> list[int]:
    index = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [index[k] for k in keys]


def reduce(spa: SpaInstance) -> Reduction:
    """Build the matroid instance whose super-stable sets are the super-stable matchings.

    Raises :class:`InputError` if an acceptable pair sits under a zero
    capacity, since that pair would be a loop of the lecturer-side matroid.
    """
    pairs = spa.pairs
    n = len(pairs)
    for s, p in pairs:
        l = spa.lecturer_of(p)
        if spa.project_caps[p - 1] == 0:
            raise InputError(f"acceptable pair ({s}, {p}) under project {p} with capacity 0")
        if spa.lecturer_caps[l - 1] == 0:
            raise InputError(f"acceptable pair ({s}, {p}) under lecturer {l} with capacity 0")

    by_student: dict[int, list[int]] = {}
    by_project: dict[int, list[int]] = {}
    by_lecturer: dict[int, list[int]] = {}
    for e, (s, p) in enumerate(pairs):
        by_student.setdefault(s, []).append(e)
        by_project.setdefault(p, []).append(e)
        by_lecturer.setdefault(spa.lecturer_of(p), []).append(e)

    m_d = PartitionMatroid(n, tuple(tuple(v) for _, v in sorted(by_student.items())),
                           tuple(1 for _ in by_student))
    sets, caps = [], []
    for p, members in sorted(by_project.items()):
        sets.append(tuple(members))
        caps.append(spa.project_caps[p - 1])
    for l, members in sorted(by_lecturer.items()):
        sets.append(tuple(members))
        caps.append(spa.lecturer_caps[l - 1])
    m_h = LaminarMatroid(n, tuple(sets), tuple(caps))

    # across agents the lower index is strictly better; inside one agent its own ties apply
    rank_d = _dense([(s, spa.student_rank[(s, p)]) for s, p in pairs])
    rank_h = _dense([(spa.lecturer_of(p), spa.lecturer_rank[spa.lecturer_of(p)][s])
                     for s, p in pairs])
    inst = Instance(n, m_d, m_h, WeakOrder(tuple(rank_d), "D"), WeakOrder(tuple(rank_h), "H"))
    return Reduction(inst, pairs)


def _check_pairs(spa: SpaInstance, matching: Iterable[Pair]) -> frozenset:
    matching = frozenset(tuple(pair) for pair in matching)
    for pair in matching:
        if pair not in spa.pair_set:
            raise InputError(f"pair {pair} is not acceptable")
    return matching


def _loads(spa: SpaInstance, matching: frozenset):
    per_student: dict[int, list[Pair]] = {}
    per_project: dict[int, list[Pair]] = {}
    per_lecturer: dict[int, list[Pair]] = {}
    for s, p in matching:
        per_student.setdefault(s, []).append((s, p))
        per_project.setdefault(p, []).append((s, p))
        per_lecturer.setdefault(spa.lecturer_of(p), []).append((s, p))
    return per_student, per_project, per_lecturer


def is_spa_matching(spa: SpaInstance, matching: Iterable[Pair]) -> bool:
    matching = _check_pairs(spa, matching)
    per_student, per_project, per_lecturer = _loads(spa, matching)
    return (all(len(v) <= 1 for v in per_student.values())
            and all(len(v) <= spa.project_caps[p - 1] for p, v in per_project.items())
            and all(len(v) <= spa.lecturer_caps[l - 1] for l, v in per_lecturer.items()))


def spa_blocks(spa: SpaInstance, matching: Iterable[Pair], pair: Pair) -> bool:
    """Whether the acceptable pair ``(s, p)`` outside ``matching`` blocks it.

    Ties count as blocking: the student must weakly prefer ``p`` to their
    assignment (or be unassigned), and the lecturer side must have room or
    weakly prefer ``s`` to someone it would have to drop.
    """
    matching = _check_pairs(spa, matching)
    pair = tuple(pair)
    if pair not in spa.pair_set:
        raise InputError(f"pair {pair} is not acceptable")
    if pair in matching:
        raise PreconditionError(f"pair {pair} is already in the matching")
    return _blocks(spa, _loads(spa, matching), pair)


def _blocks(spa: SpaInstance, loads, pair: Pair) -> bool:
    per_student, per_project, per_lecturer = loads
    s, p = pair
    l = spa.lecturer_of(p)

    mine = per_student.get(s, [])
    if mine:
        (_, q), = mine
        if spa.student_rank[(s, p)] > spa.student_rank[(s, q)]:
            return False

    pref = spa.lecturer_rank[l]
    at_project = per_project.get(p, [])
    at_lecturer = per_lecturer.get(l, [])
    project_full = len(at_project) >= spa.project_caps[p - 1]
    lecturer_full = len(at_lecturer) >= spa.lecturer_caps[l - 1]
    if not project_full and not lecturer_full:
        return True
    if project_full:
        return any(pref[s] <= pref[t] for t, _ in at_project)
    return any(pref[s] <= pref[t] for t, _ in at_lecturer)


def spa_super_stable(spa: SpaInstance, matching: Iterable[Pair]) -> bool:
    matching = _check_pairs(spa, matching)
    if not is_spa_matching(spa, matching):
        return False
    loads = _loads(spa, matching)
    return not any(_blocks(spa, loads, pair) for pair in spa.pairs if pair not in matching)


def spa_brute_force(spa: SpaInstance, limit: int = 20) -> list[frozenset]:
    """All super-stable matchings, by enumerating subsets of the acceptable pairs."""
    pairs = spa.pairs
    if len(pairs) > limit:
        raise PreconditionError(f"brute force refused: {len(pairs)} pairs exceeds {limit}")
    out = []
    for k in range(len(pairs) + 1):
        for combo in combinations(pairs, k):
            if spa_super_stable(spa, combo):
                out.append(frozenset(combo))
    return out
