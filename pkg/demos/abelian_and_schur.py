"""The abelian index, its Schur limit, and the large-N limit.

Run: python3 demos/abelian_and_schur.py
"""
from m5index import formulas as F
from m5index.frames import schur_limit
from m5index.oracles import macmahon_numbers, partition_numbers
from m5index.plethystic import pexp
from m5index.render import render_euler, render_series
from m5index.series import EulerExpr, euler_expand, laurent, mono

f1 = F.single_particle_f1()
print("single-particle index of the free tensor multiplet:")
print("  y frame:", render_euler(f1))
print("  t frame:", render_euler(F.single_particle_f1_t_frame(), "t"))
print("  equal as rational functions:", f1 == F.single_particle_f1_t_frame())

chi1 = F.index_chi(F.TheorySpec(1), 3)
print("\nfull index to q^3 (t frame):")
print(" ", render_series(chi1, "t"))

# Setting y = y3 = 1 leaves a single chiral boson.
s = pexp(euler_expand(schur_limit(f1), 15))
print("\nSchur limit, coefficients of q^0..q^14:", [s[mono(q=n)] for n in range(15)])
print("partition numbers:                      ", partition_numbers(15))

# W_N vacuum characters from the reduced index.  The specialization leaves y1
# formally present; the result is independent of it as a rational function.
for N in (2, 3, 4):
    red = schur_limit(F.single_particle_fN(F.TheorySpec(N, True)))
    target = EulerExpr(laurent({mono(q=s): 1 for s in range(2, N + 1)}), [mono(q=1)])
    print(f"Schur limit of reduced f_{N} equals {render_euler(target)}:", red == target)

# Supergravity: Schur limit q/(1-q)^2, whose plethystic exponential is MacMahon's function.
sugra = schur_limit(F.sugra_single_particle())
mac = pexp(euler_expand(sugra, 12))
print("\nsupergravity Schur limit equals q/(1-q)^2:", sugra == EulerExpr(laurent({mono(q=1): 1}), [mono(q=1)] * 2))
print("plane partitions:", [mac[mono(q=n)] for n in range(12)], "==", macmahon_numbers(12))

# f_N agrees with f_sugra through q^N.
for N in range(1, 5):
    d = euler_expand(F.sugra_single_particle(), N + 2) - euler_expand(F.single_particle_fN(F.TheorySpec(N)), N + 2)
    print(f"N={N}: f_sugra - f_N starts at q^{d.valuation2() // 2}")
