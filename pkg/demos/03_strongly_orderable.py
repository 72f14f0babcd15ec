"""Strongly orderable graphs: every instance is YES, in at most n flips.

With a strong ordering in hand, a canonical perfect matching arises from
the greedy rule "match the earliest live vertex to its earliest live
neighbor", and any perfect matching reaches it with one flip per greedy
pair.  Interval graphs ordered by right endpoint are the standard source
of strong orderings.
"""

import random

from matchflip import (
    canonical_matching,
    solve_strongly_orderable,
    verify_sequence,
    verify_strong_ordering,
)
from matchflip.generators import mutate_by_flips, random_interval_graph

rng = random.Random(42)

g, order = random_interval_graph(16, rng)
print("interval graph: n =", g.n, " m =", g.m)
print("ordering verified:", verify_strong_ordering(g, order).valid)

canon = canonical_matching(g, order)
print("canonical perfect matching:", sorted(canon))

m_ini = canon
m_tar = mutate_by_flips(g, canon, rng, 12)
seq = solve_strongly_orderable(g, order, m_ini, m_tar)
print(f"sequence of {len(seq)} flips (bound n = {g.n}):")
for mv in seq.moves:
    print("  flip", mv.cycle)
print("verified:", verify_sequence(g, m_ini, seq, m_tar).ok)

# a big instance stays fast: the whole route is linear-time
g, order = random_interval_graph(10_000, rng)
m_ini = canonical_matching(g, order)
m_tar = mutate_by_flips(g, m_ini, rng, 80)
import time

t0 = time.perf_counter()
seq = solve_strongly_orderable(g, order, m_ini, m_tar)
print(f"n=10000 solved in {time.perf_counter() - t0:.3f}s, {len(seq)} flips")
