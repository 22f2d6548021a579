"""
Basic trees and their actions
=============================

Each surface gives a tree built from one subtree per twist. Horizontal twists
become parasols, vertical ones become short linear pieces. The valences
recover the weight.
"""

from fractions import Fraction
from math import prod

from twobridge import positive_expansion
from twobridge.smoothing import Smoothing
from twobridge.tree import assemble_basic_tree, enumerate_actions, export_dot, weight_from_tree

n = positive_expansion(Fraction(82, 429))
t = assemble_basic_tree(n, Smoothing.parse("0100"))
for att in t.subtrees:
    print(att.subtree.label, "at", att.anchor)

print("valences", t.valences, "product of v-1:", prod(v - 1 for v in t.valences))
print("weight", weight_from_tree(t), "actions", len(enumerate_actions(t)))

# The trefoil tree is a single tripod with legs of length two.
print(export_dot(assemble_basic_tree(positive_expansion(Fraction(1, 3)), Smoothing.parse("0"))))
