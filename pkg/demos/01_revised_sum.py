"""
Ordered fuzzy numbers and their two sums
========================================

A trapezoidal ordered fuzzy number is a monotonic quadruple. Reading it
left to right gives its orientation: an increasing quadruple "may be
bigger", a decreasing one "may be less".
"""

# %%
from trofn import TrOFN, kosinski_sum, membership, revised_sum
from trofn.core import NonexistentKosinskiSum

up = TrOFN(1, 3, 7, 8)
down = TrOFN(5, 4, 4, 2)
print(up, up.orientation.value)
print(down, down.orientation.value)

# %%
# Membership degrees are exact rationals. The decreasing number uses the
# mirrored half-open edges, so 4.5 sits on its rising side.
for t in ["0", "2", "5", "7.5"]:
    print(f"mu_up({t}) = {membership(up, t)}")
print(f"mu_down(4.5) = {membership(down, '4.5')}")

# %%
# Adding coordinates one by one (the Kosiński sum) gives (6, 7, 11, 10),
# which is not monotonic and so not a fuzzy number at all.
try:
    kosinski_sum(up, down)
except NonexistentKosinskiSum as exc:
    print("no Kosiński sum:", [str(v) for v in exc.quadruple])

# %%
# The revised sum always lands on a valid number and matches the
# Kosiński sum whenever the latter exists.
pairs = [
    ((1, 2, 4, 6), (5, 3, 2, 1)),
    ((6, 4, 2, 1), (1, 2, 3, 5)),
    ((1, 2, 4, 4), (5, 3, 2, 1)),
    ((4, 4, 2, 1), (1, 2, 3, 5)),
    ((1, 2, 3, 4), (6, 3, 2, 2)),
    ((1, 3, 7, 8), (5, 4, 4, 2)),
]
for x, y in pairs:
    x, y = TrOFN(*x), TrOFN(*y)
    print(f"{x} ⊞ {y} = {revised_sum(x, y)}")

# %%
# Decimal text stays exact.
print(revised_sum(TrOFN("0.1", "0.2", "0.2", "0.3"), TrOFN.crisp("0.2")))
