"""Multivaluedness: walking the sheets over a single u.

The analytic continuation of the zeta function takes infinitely many values
over each u away from eight special points.  Sheets over a fixed u are
reached by acting on the half-period ratio with words in a free group of
three Mobius generators; every sheet satisfies the same functional equation
under (u, t) -> (1/(3u), t).
"""

from gridzeta import DeckWord, deck_transform, functional_equation_residual, lift_principal, zeta_tilde
from gridzeta.errors import PrecisionError

u = 0.15
base = lift_principal(u)
print(f"principal sheet over u = {u}:  t = {base.t:.6f},  Z = {zeta_tilde(base):.8f}")
print()

words = [(), (2,), (-2,), (3,), (-3,), (2, 2), (-2, -2), (2, -3), (3, 3)]
print(f"{'word':>10} | {'t':>24} | {'Z':>28} | FE residual")
print("-" * 86)
for letters in words:
    w = DeckWord.from_letters(letters)
    try:
        sigma = deck_transform(base, w)
    except PrecisionError:
        print(f"{str(w):>10} | {'(|t| too close to 1)':>24} |")
        continue
    z = zeta_tilde(sigma)
    fe = functional_equation_residual(sigma)
    print(f"{str(w):>10} | {sigma.t:.6f} | {z:.8f} | {fe:.1e}")

print()
print("note g1 (the translation by 4) fixes t: it permutes half-period lifts")
print("that project to the same sheet, so new values come from g2 and g3.")
