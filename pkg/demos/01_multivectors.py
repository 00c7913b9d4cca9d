"""A first walk through the Clifford kernel: products, reflections, rotors.

Run:  python3 demos/01_multivectors.py
"""

import math

from versorlab import (
    Signature, Versor, basis, blade, exp_bivector, reflect, sandwich, vector,
)

sig = Signature(3, 0)
e1, e2, e3 = basis(sig)

print("== products ==")
print("e1 * e1        =", e1 * e1)
print("e1 * e2        =", e1 * e2)
print("e2 * e1        =", e2 * e1, "  (orthogonal vectors anticommute)")
I = e1 * e2 * e3
print("pseudoscalar I =", I, " with I^2 =", (I * I).scalar)

print()
print("== a vector splits a product into symmetric + antisymmetric parts ==")
a = vector(sig, [1.0, 2.0, 0.0])
b = vector(sig, [0.0, 1.0, -1.0])
print("a b          =", a * b)
print("(ab + ba)/2  =", (a * b + b * a) / 2, "  <- the inner product")
print("(ab - ba)/2  =", (a * b - b * a) / 2, "  <- the plane they span")

print()
print("== reflections are single-vector sandwiches ==")
mirror = vector(sig, [1.0, 0.0, 0.0])
v = vector(sig, [3.0, 4.0, 5.0])
print("reflect(v, e1)      =", reflect(v, mirror))
print("sandwich(v, e1)     =", sandwich(v, Versor(mirror)))

print()
print("== two reflections make a rotation ==")
theta = math.pi / 3
R = exp_bivector(blade(sig, "e12"), theta / 2)
print(f"R = exp(e12 * pi/6) =", R.mv)
print("R acting on e1      =", sandwich(e1, R))
print("expected            = cos(60 deg) e1 + sin(60 deg) e2")
print()
print("rotor composition: R * R rotates twice as far:")
print("R R acting on e1    =", sandwich(e1, R * R))
