"""Student-project allocation with ties, solved through the matroid reduction.

Three students, two lecturers, three projects.  Lecturer 1 offers projects
1 and 2 but supervises at most two students in total.  The same market is
solved twice: once with lecturer 1 indifferent between students 1 and 2,
once with a strict preference.
"""

from superstable import solve
from superstable.io import parse_spa
from superstable.spa import reduce, spa_blocks, spa_brute_force, spa_super_stable

TEMPLATE = """
3 2 3            # students lecturers projects
1 1 (2 3)        # student 1 wants project 1, then 2 and 3 equally
2 (1 2)
3 3
1 1 1            # project 1: one place, lecturer 1
2 1 1
3 1 2
1 2 {lecturer1}  # lecturer 1: two places
2 1 (1 3)
"""


def run(title, lecturer1):
    spa = parse_spa(TEMPLATE.format(lecturer1=lecturer1))
    reduction = reduce(spa)
    outcome = solve(reduction.instance)
    print(f"\n{title}")
    if outcome.found:
        matching = reduction.to_pairs(outcome.solution)
        print("  super-stable matching:", sorted(matching))
        print("  verified directly on the allocation:", spa_super_stable(spa, matching))
    else:
        print(f"  no super-stable matching ({outcome.reason})")
        candidate = {(1, 1), (2, 2), (3, 3)}
        blockers = [p for p in spa.pairs if p not in candidate and spa_blocks(spa, candidate, p)]
        print(f"  e.g. {sorted(candidate)} is blocked by {blockers}")
    print("  brute force over all matchings agrees:",
          bool(spa_brute_force(spa)) == outcome.found)
    return reduction


reduction = run("lecturer 1 likes students 1 and 2 equally", "(1 2) 3")
print("\nacceptable pairs become matroid elements:")
for e, pair in enumerate(reduction.pairs):
    print(f"  element {e} = student {pair[0]}, project {pair[1]}")
run("lecturer 1 prefers student 1", "1 2 3")
