"""The exact rational series: log-determinant, determinant, zeta, geodesics.

Everything here is integer / rational arithmetic; the headline check is that
composing the theta closed form as formal series reproduces the zeta series
coefficient for coefficient.
"""

from gridzeta import (
    det_series,
    geodesic_counts_from_series,
    t_series_in_u,
    trlog_series,
    zeta_series,
    zeta_series_via_theta,
)

M = 10

print("log-det series (even coefficients):")
tl = trlog_series(M)
print("  ", [str(tl[2 * m]) for m in range(M + 1)])

print("determinant series:")
d = det_series(M)
print("  ", [str(d[2 * m]) for m in range(M + 1)])

print("zeta series:")
z = zeta_series(M)
print("  ", [str(z[2 * m]) for m in range(M + 1)])

zv = zeta_series_via_theta(M)
print("theta-route series equals the combinatorial one exactly:", zv.coeffs == z.coeffs)

print()
print("the modulus-relation branch t(u):")
t = t_series_in_u(15)
print("  ", [f"{t[n]} u^{n}" for n in range(1, 16, 2)])

print()
print("closed-geodesic counts N_m (based, non-backtracking, tailless):")
for m, n in geodesic_counts_from_series(16):
    if m % 2 == 0:
        print(f"   N_{m:<2d} = {n}")

print()
print("as JSON:", zeta_series(3).to_json())
