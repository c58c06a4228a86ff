"""
Dual posets, non-crossing trees and flips
=========================================

The truncated planar dual of a member is a bipartite non-crossing tree;
its linear extensions count the volume.  Flipping an edge of the tree is
the same as setting a 0 of the word to 1.
"""
from flowvol import (count_bnt, crossing_positions, dag_from_word, flip, flip_edge_for_position,
                     linear_extensions, spanning_path, tree_from_word, truncated_dual, volume_f1,
                     word_from_tree)
from flowvol.export import poset_to_dot

for bits in ["00", "01", "10", "11"]:
    g = dag_from_word(bits)
    t = truncated_dual(g)
    print(bits, t, " e(T) =", linear_extensions(t), " vol =", volume_f1(g))

print(poset_to_dot(truncated_dual(dag_from_word("10"))))

# edge crossings sit exactly at the 1-positions
print(crossing_positions(dag_from_word("1011")))

# word <-> tree, and a flip
w = "010010110010"
t = tree_from_word(w)
print(t.size, "elements; spanning path relations", spanning_path(t))
t2 = flip(t, flip_edge_for_position(4))
print(word_from_tree(t), "->", word_from_tree(t2))
print(linear_extensions(t), ">=", linear_extensions(t2))

print([count_bnt(n) for n in range(2, 11)])
