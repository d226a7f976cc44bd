"""Greedy intervals against planar constellations, marginal by marginal."""

from greedy_tamari import closedform as cf

for m in (1, 2, 3):
    rep = cf.check_conjecture(m, 8 - m)
    print(f"m={m}: {len(rep.checks)} checks, all equal: {rep.passed}")

rep = cf.check_conjecture(2, 3)
for c in rep.checks:
    if c.n == 3:
        print(f"n=3 {c.key:18s} intervals={c.lhs:3d} constellations={c.rhs:3d}")
print(rep.notes[0])
