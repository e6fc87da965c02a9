"""Evaluate the lattice zeta function by three independent routes.

The same number comes out of
  (1) the theta closed form  t e^{-F(t)} / (u (1-u^2)),
  (2) quadrature of the log-determinant over the torus,
  (3) the exact power series from closed-walk combinatorics,
which is the package's basic sanity story.
"""

from gridzeta import (
    lift_principal,
    zeta_series,
    zeta_tilde,
    zeta_via_quadrature,
)

points = [0.05, 0.1, 0.25, -0.2, 0.2 + 0.2j, 0.4j, -0.15 - 0.25j]
series = zeta_series(24)

print(f"{'u':>14} | {'theta route':>24} | {'quadrature':>12} | {'series':>12}")
print("-" * 72)
for u in points:
    z_theta = zeta_tilde(lift_principal(u))
    z_quad = zeta_via_quadrature(u)
    z_series = series.evaluate(u)
    print(
        f"{u!s:>14} | {z_theta.real:+.6e} {z_theta.imag:+.3e}i | "
        f"{abs(z_quad - z_theta):.2e} | {abs(z_series - z_theta):.2e}"
    )

print()
print("The quadrature and series columns show deviations from the theta route.")
print("The series column is only meaningful inside the series' disk of")
print("convergence (numerically about |u| < 1/3): at u = 0.4j it is garbage,")
print("while the other two routes keep agreeing to machine precision.")
