"""Frobenius roots and Cartier operators, step by step.

Run with ``python3 demos/01_frobenius_roots.py``.
"""

# %%
# A polynomial over F_5 splits into q-th powers times basis monomials
# x^i y^j with 0 <= i, j < q.  The root of (h) is generated by the
# coefficient polynomials of that decomposition.
from fjump import CartierOp, Ideal, Ring, bracket_power, cartier_apply, frobenius_root, stable_image_desc

R = Ring.make(5, "x,y")
h = R.parse("x^7*y^3 + 2*x^12 + x^5*y^10")
print("h             =", h)
print("(h)^[1/5]     =", frobenius_root(Ideal(R, [h]), 1).to_strings())

# %%
# The root is the smallest ideal whose Frobenius power contains (h).
root = frobenius_root(Ideal(R, [h]), 1)
print("root^[5] >= (h):", bracket_power(root, 1) >= Ideal(R, [h]))

# %%
# Monomials: (x^a)^[1/q] = (x^floor(a/q)).
S = Ring.make(3, "x")
for a in range(0, 30, 4):
    print(f"  (x^{a:<2})^[1/9] =", frobenius_root(Ideal.parse(S, [f"x^{a}"]), 2).to_strings())

# %%
# A Cartier operator multiplies by a premultiplier g before taking the root.
# With g = x^5 the image of (1) is (x), and (x) is a fixed point.
shift = CartierOp.make(1, R.parse("x^5"))
print("phi((1))      =", cartier_apply(shift, Ideal.unit(R)).to_strings())
orbit = stable_image_desc(shift, Ideal.unit(R))
print("orbit         =", [g.to_strings() for g in orbit.iterates], "fixed:", orbit.fixed)

# %%
# A longer orbit: g = (x*y)^4 * (x + y)^5 passes through (x + y) and
# settles at (x + y)*(x, y).
op = CartierOp.make(1, R.parse("x^4*y^4") * R.parse("x + y") ** 5)
orbit = stable_image_desc(op, Ideal.unit(R))
for n, G in enumerate(orbit.iterates):
    print(f"  J_{n} =", G.to_strings())
