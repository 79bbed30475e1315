"""F-pure thresholds of the cusp x^2 + y^3 as the prime varies.

The numbers nu(p^e)/p^e increase to the threshold; the last column is the
certified value.
"""

# %%
import numpy as np

from fjump import Ring, fpt, nu

primes = [2, 3, 5, 7, 11, 13]
levels = [1, 2, 3]

# %%
table = np.zeros((len(primes), len(levels)))
values = []
for i, p in enumerate(primes):
    f = Ring.make(p, "x,y").parse("x^2 + y^3")
    for j, e in enumerate(levels):
        table[i, j] = nu(f, e) / p**e
    values.append(fpt(f))

# %%
print(" p   " + "  ".join(f"nu(p^{e})/p^{e}" for e in levels) + "   fpt")
for p, row, r in zip(primes, table, values):
    cells = "  ".join(f"{v:11.6f}" for v in row)
    print(f"{p:2d}   {cells}   {r.to_json()['fpt'] if r.certified else 'unresolved'}")

# %%
# The approximants never decrease with e.
assert np.all(np.diff(table, axis=1) >= 0)

# %%
# Away from p = 2, 3 the threshold is 5/6 exactly when p = 1 mod 6.
for p, r in zip(primes, values):
    if p > 3:
        print(p, p % 6, r.to_json()["fpt"])
