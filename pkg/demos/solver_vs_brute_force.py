"""Cross-check the solver against exhaustive search on random instances.

Instances mix all five matroid kinds and several tie densities.  For each
one we compare the solver's verdict with brute-force enumeration and tally
how often a super-stable set exists.
"""

from collections import Counter

from superstable.fuzzing import TIE_DENSITIES, cross_check, fuzz_configs
from superstable.generate import generate
from superstable.stability import brute_force_all

exists, total = Counter(), Counter()
problems = 0
for config in fuzz_configs(seed=1, count=400, max_elements=8):
    inst = generate(config)
    stable = brute_force_all(inst)
    problems += bool(cross_check(inst, stable_sets=stable))
    total[config.tie_density] += 1
    exists[config.tie_density] += bool(stable)

print("tie density   instances   with a super-stable set")
for density in TIE_DENSITIES:
    share = exists[density] / total[density]
    print(f"{density:>11}   {total[density]:>9}   {exists[density]:>5} ({share:.0%})")
print(f"\ndisagreements with brute force: {problems}")
