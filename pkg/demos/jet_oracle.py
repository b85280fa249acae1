"""Recover g_k by counting jets of graded bundles on the formal 3-disk.

The weight conventions are not fixed in advance: all 48 sign choices are tried,
and exactly one reproduces g_-1 and g_0.  That convention then predicts g_k for
higher k with no further input.

Run: python3 demos/jet_oracle.py
"""
from m5index import formulas as F
from m5index.jets import bundle_spec_for_weight, calibration_report, jet_character, summand_blocks
from m5index.render import render_monomial
from m5index.series import euler_expand

report = calibration_report(5)
print("matching conventions:", [c.key() for c in report.matches])
print("rejected:", len(report.rejected))
print("adding the central direction at k = -1 keeps f_1:", report.central_extension_matches_f1)

conv = report.matches[0]
print("\ncoordinate fugacities (t frame):")
for name, e in conv.coordinate_weights().items():
    print(f"  {name}: {render_monomial(e, 't')}")

for k in range(1, 5):
    jets = jet_character(bundle_spec_for_weight(k), conv, 8)
    print(f"g_{k} reproduced through q^8:", jets == euler_expand(F.single_particle_g(k), 8))

# Each summand S^a(C^2) contributes whole sl(2) multiplets chi_a(r), with sign -1 when odd.
print("\nsl(2) content of each summand of V(2) below q^8, as {highest weight: multiplicity}:")
for summand, blocks in summand_blocks(2, conv, 8):
    kind = "odd " if summand.odd else "even"
    contents = sorted({tuple(sorted(m.items())) for m in blocks.values()})
    print(f"  {kind} S^{summand.sl2_weight} x {summand.slot}: {len(blocks)} levels, contents {contents}")
