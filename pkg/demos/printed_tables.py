"""Compare computed expansions with the transcribed printed tables.

Rows marked MISMATCH are places where the printed display disagrees with the
exact expansion; both versions are shown.

Run: python3 demos/printed_tables.py
"""
from fractions import Fraction

from m5index import formulas as F
from m5index.tables import render_level
from m5index.verify import X_DEGREE, imamura_rows, kim_rows

print("y-frame comparison")
for name, q2, printed, ours, _ in kim_rows():
    same = {k: v for k, v in printed.items() if v} == {k: v for k, v in ours.items() if v}
    print(f"  {name:10s} q^{Fraction(q2, 2)}  {'ok      ' if same else 'MISMATCH'}  {render_level(ours)}")
    if not same:
        print(f"  {'':10s}      printed:  {render_level(printed)}")

print("\nx-frame comparison (x = q y), as power series in x")
for name, q2, ab, printed, ours, _ in imamura_rows():
    want = printed.series(X_DEGREE) if printed is not None else {}
    got = {j: c for j, c in ours.items() if c}
    if want != got:
        print(f"  {name} q^{Fraction(q2, 2)} chi[{ab[0]},{ab[1]}]: printed {printed.render()}")
        print(f"      computed {render_level({(j, (0, 0)): c for j, c in got.items()}, 'x')} + O(x^{X_DEGREE})")

# chi_3 and chi_2 differ first at q^3, by y^3 q^3.
d = F.index_chi(F.TheorySpec(3), 4) - F.index_chi(F.TheorySpec(2), 4)
print("\nchi_3 - chi_2 below q^4:", d)
