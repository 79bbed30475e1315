"""Restricted test ideals along the line y = 0.

The operator ψ(y^{p−1} h ·) preserves (y).  Restricting the resulting test
ideal to the line gives the test ideal of the pair on the line itself.
"""

# %%
from fjump import CartierOp, Ideal, Ring, center_check, fedder_lift, restricted_test_ideal, test_ideal

p = 3
R = Ring.make(p, "x,y")
S = Ring.make(p, "x")
Q = Ideal.parse(R, ["y"])

# %%
(lift,) = fedder_lift(Q, 1)
h = R.parse("x + y")
op = CartierOp.make(1, lift * h)
print("premultiplier  :", op.premultiplier())
print("Q compatible   :", center_check(op, Q))

# %%
f = R.parse("x^3 + y^2 + x*y")
t = "1/2"
res = restricted_test_ideal(op, Q, Ideal(R, [f]), t)
print("restricted     :", res.ideal.to_strings(), "certified:", res.certified)
print("seed used      :", res.certificate["seed"])

# %%
# On the line: f becomes x^3 and the operator becomes ψ(x ·).
on_line = test_ideal(Ideal.parse(S, ["x^3"]), t, op=CartierOp.make(1, S.parse("x")))
print("on the line    :", on_line.ideal.to_strings())
