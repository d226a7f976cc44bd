"""Walk through m-Dyck paths, their product, and the two Tamari orders."""

from greedy_tamari.paths import DyckWord, enumerate_paths, factorize, star, stats
from greedy_tamari.posets import build_poset, greedy_covers, intervals, ordinary_covers

# Paths of size 2 for m = 2: three words, already in a topological order.
for w in enumerate_paths(2, 2):
    print(w, stats(w))

# The product replaces the rightmost peak of the left factor.
a, b = DyckWord(2, "110010000"), DyckWord(2, "110000")
print(a, "*", b, "=", star(a, b))
print("factors of 110011000000:", [str(g) for g in factorize(DyckWord(2, "110011000000"))])

# One valley, two ways to swap it: the greedy cover jumps further.
w = DyckWord(1, "101010")
print("greedy covers  ", [str(c) for c in greedy_covers(w)])
print("ordinary covers", [str(c) for c in ordinary_covers(w)])

# Intervals of the greedy order on D_{2,2}: a three-element chain gives 6.
g = build_poset(2, 2, "greedy")
for rec in intervals(g, with_chain=True):
    print(f"[{rec.lower}, {rec.upper}]  d={rec.d_upper}  chain={rec.chain_length}")
