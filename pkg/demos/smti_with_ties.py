"""Stable marriage with ties, seen as two partition matroids.

Two men and two women, everyone acceptable.  Element ids:
0 = (m1, w1), 1 = (m1, w2), 2 = (m2, w1), 3 = (m2, w2).
The men's side is one matroid (each man matched at most once), the women's
side the other.  Super-stability asks that nobody would even weakly prefer
to switch, so ties make it fragile.
"""

from superstable import Instance, PartitionMatroid, WeakOrder, brute_force_all, solve

MEN = PartitionMatroid(4, ((0, 1), (2, 3)), (1, 1))
WOMEN = PartitionMatroid(4, ((0, 2), (1, 3)), (1, 1))
NAMES = {0: "m1-w1", 1: "m1-w2", 2: "m2-w1", 3: "m2-w2"}


def show(title, men_ranks, women_ranks):
    inst = Instance(4, MEN, WOMEN, WeakOrder(men_ranks, "D"), WeakOrder(women_ranks, "H"))
    outcome = solve(inst)
    print(f"\n{title}")
    print("  all super-stable matchings:",
          [[NAMES[e] for e in sorted(s)] for s in brute_force_all(inst)] or "none")
    if outcome.found:
        print("  solver found:", [NAMES[e] for e in sorted(outcome.solution)])
    else:
        witness = outcome.augmenting_element
        print(f"  solver: none exists ({outcome.reason}"
              + (f", rejected element {witness} still fits)" if witness is not None else ")"))
    for rnd in outcome.rounds:
        print(f"  round {rnd.index}: {len(rnd.choices)} proposal steps, "
              f"{len(rnd.repairs)} repairs, rejected so far {sorted(rnd.rejected)}")


# Lower rank = more preferred.  Ranks are global, but only comparisons
# between elements sharing a circuit ever matter.
show("strict preferences (a stable matching always exists)", (1, 2, 3, 4), (1, 2, 3, 4))
show("m1 is indifferent between the women", (1, 1, 2, 3), (1, 2, 3, 4))
show("everyone indifferent (no super-stable matching)", (0, 0, 0, 0), (0, 0, 0, 0))
