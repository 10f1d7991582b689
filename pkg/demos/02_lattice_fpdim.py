"""The Frobenius-Perron dimension of a finite lattice.

For an element x of a finite lattice, put one vertex for each upper cover
of x and draw an arrow y -> y' whenever y is NOT a lower cover of the join
y v y'.  The FP dimension of the lattice is the largest spectral radius of
these cover quivers over all non-maximal x.  On the lattice of tau-tilting
pairs of an algebra this reproduces the loop-free part of every semibrick
Ext-quiver, which squeezes the algebra's FP dimension into a sandwich.
"""

import json
import pathlib

from taufp import fpdim_lattice, from_covers, lattice_from_dict, q_of, spectral_radius

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

# Warm-up: the weak order of the symmetric group S_3 is a hexagon.
hexagon = from_covers(
    ["e", "s", "t", "st", "ts", "sts"],
    [("s", "e"), ("t", "e"), ("st", "s"), ("ts", "t"), ("sts", "st"), ("sts", "ts")],
)
print("hexagon: join(s, t) =", hexagon.join("s", "t"))
q = q_of(hexagon, "e")
print("cover quiver at the bottom:", q.labels, q.adj.tolist())
print("FP dimension of the hexagon:", fpdim_lattice(hexagon))
print()

# The 32-element showcase lattice: it is the tau-tilting poset of the
# radical-square-zero algebra on the complete directed triangle, and its FP
# dimension is exactly 2.
lat = lattice_from_dict(json.loads((FIXTURES / "example31.json").read_text()))
print(f"big fixture: {len(lat)} elements, {len(lat.covers)} covers")
val, witness = fpdim_lattice(lat)
print("FP dimension =", val, "attained at", witness)

for x in ("x", "x'", "x''"):
    qq = q_of(lat, x)
    print(f"  Q at {x}: vertices {qq.labels}, rho = {spectral_radius(qq)}")
