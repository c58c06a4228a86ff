"""
Flow decomposition trees and volumes
====================================

The normalized volume of the unit flow polytope of G is a Kostant partition
function value.  Several netflow vectors give the same number.
"""
from flowvol import (Dag, FLOW_REVERSAL, LIDSKII_SIMPLE, LIDSKII_SUM, TREE, W_SPECIAL,
                     build_flow_tree, dag_from_word, kostant, make_w, volume_f1)

# K_4 with netflow (1,1,1,-3): seven flows
k4 = Dag(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
tree = build_flow_tree(k4, (1, 1, 1, -3))
print("K_4 leaves:", tree.leaf_count(), "tree nodes:", len(tree))
for leaf in tree.leaves():
    print("  ", leaf.flow)

# T_G(w_4) for G_11, level by level
g = dag_from_word("11")
t = build_flow_tree(g, make_w(4))
for level in range(1, 6):
    print("level", level, [node.leaf_count() for node in t.level(level)])

# the four formulas for a few members
for bits in ["00", "11", "1011", "01101"]:
    g = dag_from_word(bits)
    vols = [volume_f1(g, f) for f in (W_SPECIAL, LIDSKII_SIMPLE, FLOW_REVERSAL, LIDSKII_SUM)]
    print(bits, vols)

# the two counting methods give the same number
g = dag_from_word("010")
print(kostant(g, make_w(5), TREE), kostant(g, make_w(5)))

# all-zeros words give n!, all-ones words give Euler zigzag numbers
print([volume_f1(dag_from_word("0" * (n - 2))) for n in range(3, 10)])
print([volume_f1(dag_from_word("1" * (n - 2))) for n in range(3, 10)])
