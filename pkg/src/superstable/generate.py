"""Seeded random instances for fuzzing and property tests.

Generated matroids never contain loops, so every instance satisfies the
singleton-independence requirement of :class:`~superstable.stability.Instance`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError
from .matroids import (GraphicMatroid, LaminarMatroid, LinearMatroid, Matroid,
                       PartitionMatroid, UniformMatroid)
from .preferences import WeakOrder
from .spa import SpaInstance
from .stability import Instance

__all__ = ["MATROID_KINDS", "GeneratorConfig", "SpaGeneratorConfig", "generate",
           "generate_spa", "random_matroid", "random_weak_order"]

MATROID_KINDS = ("uniform", "partition", "laminar", "graphic", "linear")


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    min_elements: int = 0
    max_elements: int = 9
    kind_weights: dict = field(default_factory=lambda: {k: 1.0 for k in MATROID_KINDS})
    tie_density: float = 0.3
    kind_d: str | None = None  # overrides kind_weights for that side
    kind_h: str | None = None

    def validate(self):
        for kind in (self.kind_d, self.kind_h):
            if kind is not None and kind not in MATROID_KINDS:
                raise InputError(f"unknown matroid kind {kind!r}")
        if not 0 <= self.min_elements <= self.max_elements:
            raise InputError("need 0 <= min_elements <= max_elements")
        if not 0.0 <= self.tie_density <= 1.0:
            raise InputError("tie_density must lie in [0, 1]")
        unknown = set(self.kind_weights) - set(MATROID_KINDS)
        if unknown:
            raise InputError(f"unknown matroid kinds {sorted(unknown)}")
        if any(w < 0 for w in self.kind_weights.values()) or \
                sum(self.kind_weights.values()) <= 0:
            raise InputError("kind weights must be non-negative with a positive sum")


@dataclass(frozen=True)
class SpaGeneratorConfig:
    seed: int = 0
    students: tuple[int, int] = (1, 6)
    lecturers: tuple[int, int] = (1, 3)
    projects: tuple[int, int] = (1, 4)
    project_capacity: tuple[int, int] = (1, 2)
    lecturer_capacity: tuple[int, int] = (1, 3)
    max_pairs: int = 10
    tie_density: float = 0.3

    def validate(self):
        for name in ("students", "lecturers", "projects", "project_capacity",
                     "lecturer_capacity"):
            lo, hi = getattr(self, name)
            if not 0 <= lo <= hi:
                raise InputError(f"bad range for {name}: {lo}..{hi}")
        if self.lecturers[0] < 1 or self.projects[0] < 1:
            raise InputError("need at least one lecturer and one project")
        if self.projects[1] < self.lecturers[0]:
            raise InputError("every lecturer must be able to own a project")
        if self.project_capacity[0] < 1 or self.lecturer_capacity[0] < 1:
            raise InputError("capacities must be at least 1 (zero creates loop elements)")
        if self.max_pairs < 0 or not 0.0 <= self.tie_density <= 1.0:
            raise InputError("bad max_pairs or tie_density")


def random_weak_order(rng: random.Random, size: int, tie_density: float,
                      side: str = "D") -> WeakOrder:
    """Random permutation cut into bands; neighbours merge with prob. ``tie_density``."""
    perm = list(range(size))
    rng.shuffle(perm)
    ranks = [0] * size
    bucket = 0
    for i, e in enumerate(perm):
        if i and rng.random() >= tie_density:
            bucket += 1
        ranks[e] = bucket
    return WeakOrder(tuple(ranks), side)


def _random_groups(rng: random.Random, items: list, max_groups: int) -> list[list]:
    count = rng.randint(1, max(1, min(max_groups, len(items))))
    groups: list[list] = [[] for _ in range(count)]
    for x in items:
        groups[rng.randrange(count)].append(x)
    return [g for g in groups if g]


def random_matroid(rng: random.Random, kind: str, size: int) -> Matroid:
    """Random loopless matroid of the given kind on ``size`` elements."""
    if kind == "uniform":
        return UniformMatroid(size, rng.randint(1, size) if size else 0)
    if kind == "partition":
        blocks = _random_groups(rng, list(range(size)), size)
        return PartitionMatroid(size, tuple(map(tuple, blocks)),
                                tuple(rng.randint(1, len(b)) for b in blocks))
    if kind == "laminar":
        sets, caps = [], []
        blocks = _random_groups(rng, list(range(size)), size)
        for b in blocks:
            if rng.random() < 0.8:
                sets.append(tuple(b))
                caps.append(rng.randint(1, len(b)))
        for group in _random_groups(rng, blocks, max(1, len(blocks) // 2)):
            union = tuple(e for b in group for e in b)
            if len(group) > 1 or rng.random() < 0.3:
                sets.append(union)
                caps.append(rng.randint(1, len(union)))
        if size and rng.random() < 0.4:
            sets.append(tuple(range(size)))
            caps.append(rng.randint(1, size))
        return LaminarMatroid(size, tuple(sets), tuple(caps))
    if kind == "graphic":
        vertices = rng.randint(2, max(2, size // 2 + 2))
        edges = []
        for _ in range(size):
            u, v = rng.sample(range(vertices), 2)
            edges.append((u, v))
        return GraphicMatroid(vertices, tuple(edges))
    if kind == "linear":
        prime = rng.choice((2, 3, 5, 7))
        rows = rng.randint(1, max(1, size // 2 + 1))
        matrix = [[rng.randrange(prime) for _ in range(size)] for _ in range(rows)]
        for c in range(size):
            if not any(matrix[r][c] for r in range(rows)):
                matrix[rng.randrange(rows)][c] = rng.randint(1, prime - 1)
        return LinearMatroid(tuple(map(tuple, matrix)), prime, size)
    raise InputError(f"unknown matroid kind {kind!r}")


def generate(config: GeneratorConfig) -> Instance:
    """Deterministic random instance: same config, same instance."""
    config.validate()
    rng = random.Random(config.seed)
    size = rng.randint(config.min_elements, config.max_elements)
    kinds = [k for k in MATROID_KINDS if config.kind_weights.get(k, 0) > 0]
    weights = [config.kind_weights[k] for k in kinds]
    kind_d = rng.choices(kinds, weights)[0]
    kind_h = rng.choices(kinds, weights)[0]
    m_d = random_matroid(rng, config.kind_d or kind_d, size)
    m_h = random_matroid(rng, config.kind_h or kind_h, size)
    return Instance(size, m_d, m_h,
                    random_weak_order(rng, size, config.tie_density, "D"),
                    random_weak_order(rng, size, config.tie_density, "H"))


def _random_tie_groups(rng: random.Random, items: list, tie_density: float):
    items = list(items)
    rng.shuffle(items)
    groups: list[list] = []
    for i, x in enumerate(items):
        if i and rng.random() < tie_density:
            groups[-1].append(x)
        else:
            groups.append([x])
    return tuple(tuple(sorted(g)) for g in groups)


def generate_spa(config: SpaGeneratorConfig) -> SpaInstance:
    """Deterministic random SPA-ST instance with at most ``max_pairs`` acceptable pairs."""
    config.validate()
    rng = random.Random(config.seed)
    n = rng.randint(*config.students)
    m = rng.randint(*config.lecturers)
    q = rng.randint(max(m, config.projects[0]), max(m, config.projects[1]))
    owners = list(range(1, m + 1)) + [rng.randint(1, m) for _ in range(q - m)]
    rng.shuffle(owners)

    budget = config.max_pairs
    student_prefs = []
    for _ in range(n):
        k = min(budget, rng.randint(0, q))
        budget -= k
        chosen = rng.sample(range(1, q + 1), k)
        student_prefs.append(_random_tie_groups(rng, chosen, config.tie_density))

    interested: dict[int, set[int]] = {l: set() for l in range(1, m + 1)}
    for s, groups in enumerate(student_prefs, 1):
        for g in groups:
            for p in g:
                interested[owners[p - 1]].add(s)
    lecturer_prefs = []
    for l in range(1, m + 1):
        # occasionally rank students who never applied; harmless and realistic
        extra = {s for s in range(1, n + 1) if rng.random() < 0.2}
        lecturer_prefs.append(_random_tie_groups(rng, sorted(interested[l] | extra),
                                                 config.tie_density))
    return SpaInstance(
        tuple(student_prefs), tuple(lecturer_prefs), tuple(owners),
        tuple(rng.randint(*config.project_capacity) for _ in range(q)),
        tuple(rng.randint(*config.lecturer_capacity) for _ in range(m)))
