"""Cross-checking the solver against exhaustive enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .generate import MATROID_KINDS, GeneratorConfig, generate
from .solver import SolveOutcome, solve
from .stability import Instance, brute_force_all, is_super_stable

__all__ = ["TIE_DENSITIES", "cross_check", "fuzz", "FuzzResult", "fuzz_configs"]

TIE_DENSITIES = (0.0, 0.3, 0.7, 1.0)


def cross_check(inst: Instance, order: Sequence[int] | None = None,
                stable_sets: list[frozenset] | None = None) -> list[str]:
    """Problems found when comparing :func:`solve` with brute force (empty = agreement).

    Checks the verdict, the returned set, disjointness of every super-stable
    set from the final rejected set, monotone rejection and loop bounds.
    """
    outcome = solve(inst, order=order, debug=True)
    if stable_sets is None:
        stable_sets = brute_force_all(inst)
    return check_outcome(inst, outcome, stable_sets)


def check_outcome(inst: Instance, outcome: SolveOutcome,
                  stable_sets: list[frozenset]) -> list[str]:
    problems = []
    if outcome.found != bool(stable_sets):
        problems.append(f"verdict {'found' if outcome.found else 'none'} but brute force "
                        f"found {len(stable_sets)} super-stable sets")
    if outcome.found:
        report = is_super_stable(inst, outcome.solution)
        if not report:
            problems.append(f"returned set {sorted(outcome.solution)} is not super-stable "
                            f"(witness {report.witness})")
        if outcome.solution & outcome.rejected:
            problems.append("returned set meets the rejected set")
    for s in stable_sets:
        if s & outcome.rejected:
            problems.append(f"super-stable set {sorted(s)} meets rejected set "
                            f"{sorted(outcome.rejected)}")
    history = outcome.rejected_history()
    if any(not a <= b for a, b in zip(history, history[1:])):
        problems.append("rejected sets are not monotone")
    bound = inst.size + 1
    if outcome.k > bound or any(c > bound for c in outcome.choice_iterations) \
            or any(c > bound for c in outcome.repair_iterations):
        problems.append("iteration bound exceeded")
    return problems


def fuzz_configs(seed: int, count: int, max_elements: int):
    """The generator configs :func:`fuzz` walks through, deterministic in ``seed``.

    Tie densities cycle through :data:`TIE_DENSITIES` and matroid kinds
    through all kind pairs so a modest ``count`` covers every combination.
    """
    rng = random.Random(seed)
    pairs = [(a, b) for a in MATROID_KINDS for b in MATROID_KINDS]
    for i in range(count):
        kd, kh = pairs[i % len(pairs)]
        yield GeneratorConfig(seed=rng.getrandbits(48), min_elements=0,
                              max_elements=max_elements, kind_d=kd, kind_h=kh,
                              tie_density=TIE_DENSITIES[(i // len(pairs)) % len(TIE_DENSITIES)])


@dataclass
class FuzzResult:
    checked: int
    found: int
    counterexample: Instance | None = None
    problems: list[str] | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def fuzz(seed: int, count: int, max_elements: int) -> FuzzResult:
    """Generate ``count`` instances and cross-check each; stop at the first discrepancy."""
    found = 0
    for i, config in enumerate(fuzz_configs(seed, count, max_elements)):
        inst = generate(config)
        stable_sets = brute_force_all(inst)
        found += bool(stable_sets)
        problems = cross_check(inst, stable_sets=stable_sets)
        if problems:
            return FuzzResult(i + 1, found, inst, problems)
    return FuzzResult(count, found)
