"""The z3, w2 -> 0 limit and the double-product formula.

Run: python3 demos/minimal_reduction.py
"""
from m5index import formulas as F
from m5index.frames import limit_zero
from m5index.render import render_euler, render_series
from m5index.series import euler_expand

print("limit of g_-1:", render_euler(F.g_minus1_limit(), "zw"))
for k in (0, 1, 2):
    print(f"limit of g_{k}:", render_euler(F.g_min(k), "zw"))

for k in (1, 2):
    printed, fixed = F.gk_zw_form(k), F.gk_zw_form(k, corrected=True)
    g = F.single_particle_g(k)
    print(f"\nk={k}: displayed zw form equals g_k: {printed == g}; with (z1 z2 z3)^2: {fixed == g}")
    diff = euler_expand(printed, 5) - euler_expand(g, 5)
    print("  displayed minus g_k:", render_series(diff, "zw"))
    print("  same limit either way:", limit_zero(printed) == limit_zero(fixed))

for N in (1, 2, 3):
    a, b = F.minimal_index(N, 8), F.minimal_index_product(N, 8)
    print(f"\nN={N}: PExp of the limit equals the double product below degree 8: {a == b}")
print("N=2 minimal index:", render_series(F.minimal_index(2, 4), "zw"))
