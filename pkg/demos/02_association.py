"""
Bracketing changes the answer
=============================

Four triangular numbers, summed under each of the five ways to bracket
three applications of the revised sum.
"""

# %%
from trofn import association_spectrum, enumerate_association_trees, evaluate_tree, make_tofn
from trofn.spectrum import format_tree

A = make_tofn(10, 40, 70)
B = make_tofn(110, 100, 60)
C = make_tofn(50, 65, 105)
D = make_tofn(120, 90, 67)
operands = [A, B, C, D]

# %%
for tree in enumerate_association_trees(4):
    print(f"{format_tree(tree, 'ABCD'):22} = {evaluate_tree(tree, operands)}")

# %%
# Grouping the results gives four distinct values out of five trees, so
# the operation is not associative.
spectrum = association_spectrum(operands)
for entry in spectrum.entries:
    trees = ", ".join(format_tree(w.tree, "ABCD") for w in entry.witnesses)
    print(f"{entry.value}  x{entry.multiplicity}  [{trees}]")

# %%
# With every operand oriented the same way the sum is plain coordinate
# addition and all bracketings agree.
same_way = [make_tofn(1, 2, 3), make_tofn(0, 5, 9), make_tofn(2, 2, 4), make_tofn(-3, 0, 1)]
print(association_spectrum(same_way).values)
