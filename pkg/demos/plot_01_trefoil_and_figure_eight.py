"""
Surfaces of the two smallest knots
==================================

The trefoil is 1/3 and the figure-eight is 2/5. Each allowable smoothing of
the twist regions gives one essential surface.
"""

from fractions import Fraction

from twobridge import build_surfaces, cgls_seminorm

for f in (Fraction(1, 3), Fraction(2, 5)):
    print(f"knot {f}")
    for s in build_surfaces(f):
        print(f"  eps={s.eps}  m={s.m}  slope={s.slope:>3}  orientable={s.orientable}  weight={s.weight}")

# The seminorm is a weighted sum of distances to the boundary slopes.
# For the trefoil it collapses to |p - 6q|.
print(cgls_seminorm(Fraction(1, 3), (0, 1)), cgls_seminorm(Fraction(1, 3), (1, 0)))

# The figure-eight is amphichiral, so its slopes come in a +-4 pair.
print(sorted(s.slope for s in build_surfaces(Fraction(2, 5))))
