"""The binary tetrahedral group 2T built from the A3 root system.

Closing the 12 unit root vectors of A3 under the geometric product gives
Pin(A3), order 48; its even half Spin(A3) is the order-24 double cover of
the chiral tetrahedral rotation group.

Run:  python3 demos/03_tetrahedral_groups.py
"""

import math

from versorlab import (
    catalog, conjugacy_classes, exp_decomposition, generate_pin, generate_spin,
    quotient_by_sign,
)

rs = catalog("A3")
spin = generate_spin(rs)
pin = generate_pin(rs)
print(f"|Pin(A3)| = {pin.order}, |Spin(A3)| = {spin.order}")
print(f"chiral quotient: {quotient_by_sign(spin).order},",
      f"full quotient: {quotient_by_sign(pin).order}")

print()
print("== conjugacy classes of Spin(A3) = 2T ==")
print(f"{'size':>4} {'order':>5}  representative")
for c in conjugacy_classes(spin):
    print(f"{c.size:>4} {c.element_order:>5}  {c.representative.mv}")

print()
print("== every spinor is +-exp(B theta) ==")
dec = exp_decomposition(spin)
print("scalars:", [str(t.element) for t in dec.scalars()])
counts = dec.angle_counts()
for theta, n in sorted(counts.items()):
    frac = theta / math.pi
    print(f"  theta = {frac:.4f} pi : {n} elements")
print()
print("the 16 elements at pi/3 use the 8 diagonal bivector axes:")
seen = set()
for t in dec.at_angle(math.pi / 3):
    seen.add(str(t.bivector))
for s in sorted(seen):
    print("  B =", s)
