"""Symbolic checks of the polynomial identities behind the parametrizations."""

from collections import Counter

from greedy_tamari.identities import H_poly, verify_lemmaA1, verify_propA2

print("H_2 for m=1:", H_poly(1, 2))

for m in range(1, 5):
    print(f"m={m}: H recursion and specialization hold:", verify_propA2(m).passed)

# The reversed identity holds for b <= 2 and fails from b = 3 on.
rep = verify_lemmaA1(2)
print("failures by b:", Counter(c.params[3] for c in rep.failures()))
print("b <= 2 only:", verify_lemmaA1(2, b_max=2).passed)
