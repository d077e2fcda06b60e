"""The colored unknot computed three independent ways."""

import sys

from skeinlab.combinatorics import partitions_of
from skeinlab.invariants import unknot_by_characters, unknot_by_evaluator, unknot_by_hooks

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3

for k in range(1, n + 1):
    for lam in partitions_of(k):
        chars = unknot_by_characters(lam)
        hooks = unknot_by_hooks(lam)
        skein = unknot_by_evaluator(lam)
        agree = "agree" if chars == hooks == skein else "DISAGREE"
        print(f"{str(lam):>10}  {agree}  {hooks}")

# a mixed color goes through the composite basis
print("[1]/[1]", unknot_by_hooks([1], [1]), unknot_by_evaluator([1], [1]) == unknot_by_hooks([1], [1]))
