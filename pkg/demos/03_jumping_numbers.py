"""F-jumping numbers with their certificates.

Each jump comes with the ideals on both sides of it.  Jumps above 1 are
translates of jumps in (0, 1].
"""

# %%
from fjump import Ring, is_jumping_number, jumping_numbers

R = Ring.make(5, "x,y")

# %%
# A monomial: the jumps are k/2 and k/3.
res = jumping_numbers(R.parse("x^2*y^3"), 1)
for jc in res.jumps:
    print(f"  t = {str(jc.t):>4}:  {jc.left.to_strings()}  ->  {jc.right.to_strings()}")

# %%
# Integer translation on (0, 3].
res = jumping_numbers(R.parse("x"), 3)
print([(str(j.t), j.via) for j in res.jumps])

# %%
# The cusp at p = 7 has threshold 5/6, and the next jump follows at 1.
S = Ring.make(7, "x,y")
cusp = S.parse("x^2 + y^3")
print(jumping_numbers(cusp, 2).to_json())

# %%
# Multiplying a jump by p gives another jump.
for t in ["5/6", "35/6"]:
    jc = is_jumping_number(cusp, t)
    print(t, "jump" if jc.is_jump else "no jump", "certified" if jc.certified else "")
