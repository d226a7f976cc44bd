"""Solve the catalytic equations order by order and compare with enumeration."""

from greedy_tamari import verify
from greedy_tamari.posets import build_poset, histogram
from greedy_tamari.series import solve_constellations, solve_greedy, solve_greedy_q

m, N = 2, 5
I = solve_greedy(m, N)
print("I   =", I.to_text(" ; "))

# x marks the final descent, so the t^3 coefficient is a histogram.
print("enumeration, n=3:", sorted(histogram(build_poset(m, 3, "greedy"), "final-descent").items()))

print("I_q =", solve_greedy_q(m, 4).to_text(" ; "))
print("C   =", solve_constellations(m, N).to_text(" ; "))

# Every solver against poset histograms, sizes 1..4.
for eq in ("greedy", "greedy-system", "ordinary", "contacts", "constellation", "greedy-q"):
    rep = verify.verify_series(eq, m, 4)
    print(f"{eq:15s} {'agrees' if rep.passed else 'DIFFERS'}")
