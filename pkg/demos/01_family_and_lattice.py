"""
The family F_(n,3) and its Boolean lattice
==========================================

Each member is a full DAG on n+1 vertices, indexed by a binary word of
length n-2.  Turning a 0 into a 1 is a single edge interchange.
"""
from flowvol import dag_from_word, enumerate_family, brute_force_family, hasse_lattice, word_from_dag

# the four members for n=4
for bits in ["00", "01", "10", "11"]:
    g = dag_from_word(bits)
    print(bits, g.pairs())

# the word can be read back off the edges
g = dag_from_word("1011")
print("recovered word:", word_from_dag(g))

# family sizes, and a check against exhaustive stub matching
for n in range(3, 9):
    print(n, len(enumerate_family(n)))
print("n=5 matches stub matching:", set(enumerate_family(5)) == set(brute_force_family(5, 3)))

# covers of the n=5 lattice, labelled by the interchanged nested pair
for c in hasse_lattice(5).covers:
    print(f"{c.lower} -> {c.upper}   {c.pair}")
