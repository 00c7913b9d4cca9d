"""The 2D conformal model in Cl(3,1) and the modular group living inside it.

Plane points become null vectors; translations, rotations, dilations and
inversions all become sandwiching versors.  The modular generators
S: tau -> -1/tau and T: tau -> tau + 1 are two such versors, so any word in
them can be evaluated two ways -- geometrically and with complex arithmetic.

Run:  python3 demos/06_conformal_modular.py
"""

import numpy as np

from versorlab import (
    dilator, embed, extract, inversion_versor, mobius_oracle, modular_S,
    modular_T, rotation, translator, word_report,
)
from versorlab.cga2d import apply_word

print("== embedding ==")
p = embed(3.0, 4.0)
print("F(3, 4) =", p.X)
print("null:", abs((p.X * p.X).scalar) < 1e-12, " extract:", extract(p))

print()
print("== versors in action on the point (1, 1) ==")
q = embed(1.0, 1.0)
print("translate by (2, 0):", translator(2.0, 0.0).apply(q).coords)
print("rotate 90 degrees:  ", rotation(np.pi / 2).apply(q).coords)
print("dilate by e:        ", dilator(1.0).apply(q).coords)
print("invert (unit circle):", inversion_versor().apply(q).coords)

print()
print("== the modular generators are versors ==")
S, T = modular_S(), modular_T()
print("S =", S.mv, "  with S^2 =", S.mv * S.mv)
ST = S.mv * T.mv
print("(S T)^3 =", ST * ST * ST)

print()
print("== words vs the Mobius oracle ==")
for word, tau in [("T", (0.0, 1.0)), ("S", (0.0, 2.0)),
                  ("STt", (0.5, 0.5)), ("TSTS", (-0.3, 1.2))]:
    rep = word_report(word, tau)
    print(f"  {word:5s} at {tau}: versor {rep['versor_result']}, "
          f"oracle {rep['oracle_result']}, dev {rep['max_deviation']:.2e}")

print()
print("a long word stays glued to the oracle:")
word = "STtTSTTSSTT"
got = apply_word(word, (0.1, 0.9))
want = mobius_oracle(word, (0.1, 0.9))
print(f"  {word}: {got} vs {want}")
