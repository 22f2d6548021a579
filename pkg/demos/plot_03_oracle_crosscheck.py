"""
Smoothings against brute force
==============================

Every expansion of the fraction with all terms of size at least two can be
found by a depth first search. The search keeps only candidates whose tail
can still reach the target, so it stays small.
"""

import time
from fractions import Fraction
from math import gcd

from twobridge import crosscheck_expansions, enumerate_ht_expansions

print(enumerate_ht_expansions(Fraction(2, 5)))
print(crosscheck_expansions(Fraction(82, 429)).to_record()["missing"])

t0 = time.perf_counter()
count = bad = 0
for a in range(3, 100, 2):
    for b in range(1, a):
        if gcd(a, b) == 1:
            count += 1
            bad += not crosscheck_expansions(Fraction(b, a)).ok
print(f"{count} fractions, {bad} mismatches, {time.perf_counter() - t0:.1f}s")
