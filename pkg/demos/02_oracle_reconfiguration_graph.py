"""Brute-force ground truth: enumerate matchings, BFS the flip graph.

The oracle is exact and deliberately desk-scale; every solver in the
library is cross-validated against it on small instances.
"""

from matchflip import (
    FLIP_ONLY,
    FLIP_SLIDE,
    Graph,
    edge_set,
    enumerate_matchings,
    kflip,
    reachable,
    reconfiguration_stats,
)

k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
print("perfect matchings of K4:", [sorted(m) for m in enumerate_matchings(k4, "perfect")])

res = reachable(k4, edge_set([(0, 1), (2, 3)]), edge_set([(0, 2), (1, 3)]),
                FLIP_ONLY, want_path=True)
print("K4 reachability:", res.reachable, "distance:", res.distance)
print("shortest path:", res.sequence.moves)

# the 6-cycle's two perfect matchings are NOT flip-connected ...
c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
a = edge_set([(0, 1), (2, 3), (4, 5)])
b = edge_set([(1, 2), (3, 4), (5, 0)])
print("C6 flips only:", reachable(c6, a, b, FLIP_ONLY).reachable)

# ... but one 6-flip connects them
print("C6 with 6-flips:", reachable(c6, a, b, kflip(6), want_path=True).sequence.moves)

# ... and one extra chord creates a stepping stone
c6c = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
print("C6+chord distance:", reachable(c6c, a, b, FLIP_ONLY).distance)

# whole reconfiguration graphs, exactly
print("K4 stats:", reconfiguration_stats(k4, "perfect", FLIP_ONLY))
print("C6 stats:", reconfiguration_stats(c6, "perfect", FLIP_ONLY))
print("C4 size-1 matchings with slides:",
      reconfiguration_stats(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 1, FLIP_SLIDE))
