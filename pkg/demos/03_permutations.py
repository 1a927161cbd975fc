"""
Summand order matters too
=========================

The revised sum is commutative, yet a left-to-right multiple sum depends
on the order of its summands. Here all 24 orderings of four numbers are
folded, then every ordering is combined with every bracketing.
"""

# %%
import random
import time

from trofn import full_spectrum, make_tofn, permutation_spectrum

names = "ABCD"
operands = [make_tofn(10, 40, 70), make_tofn(110, 100, 60), make_tofn(50, 65, 105), make_tofn(120, 90, 67)]

# %%
spectrum = permutation_spectrum(operands)
print("folds:", spectrum.total)
for entry in spectrum.entries:
    orders = " ".join("".join(names[i] for i in w.permutation) for w in entry.witnesses)
    print(f"{entry.value}  x{entry.multiplicity}: {orders}")

# %%
# Orderings times bracketings: 24 * 5 = 120 evaluations.
start = time.perf_counter()
full = full_spectrum(operands)
print(f"{full.total} evaluations in {1e3 * (time.perf_counter() - start):.1f} ms")
for entry in full.entries:
    print(f"{entry.value}  x{entry.multiplicity}")

# %%
# Eight random numbers with alternating orientation. The default operand
# cap is eight, so this is the largest fold spectrum allowed out of the box.
rng = random.Random(2)
eight = []
for k in range(8):
    corners = sorted(rng.sample(range(40), 3))
    eight.append(make_tofn(*(corners if k % 2 else corners[::-1])))
wide = permutation_spectrum(eight)
print(f"{len(wide)} distinct values over {wide.total} orderings")
print("smallest:", wide.entries[0].value, "x", wide.entries[0].multiplicity)
print("largest: ", wide.entries[-1].value, "x", wide.entries[-1].multiplicity)
