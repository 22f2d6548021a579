"""
Pretzel conjecture table
========================

For the (p, q, r) pretzel knot only a conjectured weight table is known. Slopes
are attached for (3, 5, 7) alone.
"""

from twobridge.pretzel import pretzel_surface_table

for rec in pretzel_surface_table(3, 5, 7):
    print(rec.surface_type, rec.weight_formula_id, rec.weight, rec.slope)

print([r.weight for r in pretzel_surface_table(5, 7, 9)])
