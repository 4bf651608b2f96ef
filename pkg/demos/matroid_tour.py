"""A short walk through the matroid layer.

Every matroid is an independence oracle; rank, span, circuits and minors
are all derived from that one question.  Run with ``python3 demos/matroid_tour.py``.
"""

from superstable import (GraphicMatroid, LinearMatroid, PartitionMatroid, chain_base,
                         contract, restrict)

# A 4-cycle with one chord.  Edge ids are positions in the tuple.
#   0:(0,1) 1:(1,2) 2:(2,3) 3:(3,0) 4:(0,2)
graph = GraphicMatroid(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
print("graphic matroid on a 4-cycle with chord 4")
print("  rank of all edges:", graph.rank())
tree = graph.find_base()
print("  greedy spanning tree:", sorted(tree))
for e in sorted(graph.ground - tree):
    print(f"  edge {e} closes the cycle {sorted(graph.fundamental_circuit(e, tree))}")

# Contracting the chord glues vertices 0 and 2: edges {0,1} become parallel.
glued = contract(graph, {4})
print("  after contracting the chord, {0, 1} independent?", glued.is_independent({0, 1}))
print("  rank of the triangle {0, 1, 4} as a restriction:", restrict(graph, {0, 1, 4}).rank())

# Columns of a matrix over GF(3); column 2 = column 0 + column 1.
vectors = LinearMatroid(((1, 0, 1, 0),
                         (0, 1, 1, 0)), prime=3)
print("\nlinear matroid over GF(3)")
print("  span of {0, 1}:", sorted(vectors.span({0, 1})))
print("  column 3 is zero, so {3} is dependent:", not vectors.is_independent({3}))

# A chain base is a base that is also maximal inside every prefix of a partition.
seats = PartitionMatroid(6, ((0, 1, 2), (3, 4, 5)), (2, 1))
priority = [{5}, {0}, {1, 2, 3, 4}]
print("\npartition matroid: two seats in block A, one in block B")
print("  base honouring the priority", [sorted(p) for p in priority], "->",
      sorted(chain_base(seats, priority)))
