"""The rational parametrizations reproduce the engine and the count formulas."""

from greedy_tamari import closedform as cf
from greedy_tamari.series import solve_greedy

m, N = 2, 8
pair = cf.solve_param_greedy(m, N)
print("Z =", pair.Z.to_text(" ; "))
print("U, first terms:", pair.U.truncate(2).to_text(" ; "))
print("invariants:", cf.check_param_invariants(pair))

par = cf.eval_theorem41(m, N, pair)
print("x^2 I matches the engine:", par.hat_I == solve_greedy(m, N).shift("x", 2))
print("I(1):", [par.I_at_1[n].constant_value() for n in range(1, N)])
print("formula:", [cf.greedy_count(m, n) for n in range(1, N)])

# The ordinary pair obeys U(1) = 1 - Z instead of U(1) = 1.
opar = cf.eval_theorem54(m, N)
print("1 + Ibar(1):", [opar.one_plus_I_at_1[n].constant_value() for n in range(N)])
