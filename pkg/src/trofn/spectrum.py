"""Enumerate bracketings and orderings of a multiple revised sum.

The revised sum is commutative but neither associative nor, as a left fold,
independent of summand order. The functions here evaluate a sequence of
TrOFN under every association tree and/or every permutation and group the
distinct outcomes into a :class:`Spectrum`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .core import TrOFN, revised_sum

DEFAULT_CAP = 8
DEFAULT_BUDGET = 1_000_000


class CapExceeded(ValueError):
    """Operand count above the cap, or evaluation count above the budget."""


@dataclass(frozen=True)
class Leaf:
    index: int

    @property
    def size(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    left: "AssocTree"
    right: "AssocTree"

    @property
    def size(self) -> int:
        return self.left.size + self.right.size


AssocTree = Union[Leaf, Node]


def leaves(tree: AssocTree) -> list[int]:
    if isinstance(tree, Leaf):
        return [tree.index]
    return leaves(tree.left) + leaves(tree.right)


def tree_to_nested(tree: AssocTree):
    """``Node(Leaf(0), Node(Leaf(1), Leaf(2)))`` -> ``[0, [1, 2]]``."""
    if isinstance(tree, Leaf):
        return tree.index
    return [tree_to_nested(tree.left), tree_to_nested(tree.right)]


def tree_from_nested(obj) -> AssocTree:
    if isinstance(obj, bool):
        raise TypeError("tree leaf must be an integer")
    if isinstance(obj, int):
        return Leaf(obj)
    left, right = obj
    return Node(tree_from_nested(left), tree_from_nested(right))


def format_tree(tree: AssocTree, names: Optional[Sequence[str]] = None, op: str = "⊞") -> str:
    """Infix rendering, e.g. ``(A ⊞ B) ⊞ (C ⊞ D)``; the outer pair is dropped."""

    def name(i):
        return names[i] if names is not None else f"x{i}"

    def go(t, top):
        if isinstance(t, Leaf):
            return name(t.index)
        s = f"{go(t.left, False)} {op} {go(t.right, False)}"
        return s if top else f"({s})"

    return go(tree, True)


def catalan(n: int) -> int:
    """n-th Catalan number from ``C(0) = 1``, ``C(n+1) = sum C(i) C(n-i)``."""
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    table = [1]
    for m in range(1, n + 1):
        table.append(sum(table[i] * table[m - 1 - i] for i in range(m)))
    return table[n]


@lru_cache(maxsize=None)
def _trees(lo: int, hi: int) -> tuple:
    if lo == hi:
        return (Leaf(lo),)
    return tuple(
        Node(left, right)
        for split in range(lo, hi)
        for left in _trees(lo, split)
        for right in _trees(split + 1, hi)
    )


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("need at least one operand")
    if n > cap:
        raise CapExceeded(f"{n} operands exceeds cap {cap}")


def enumerate_association_trees(n: int, cap: int = DEFAULT_CAP) -> list[AssocTree]:
    """All full binary trees over leaves ``0..n-1`` in canonical order.

    Canonical order: root split position ascending, then left subtree order,
    then right subtree order, recursively. For ``n = 4`` the first tree is
    ``x0 ⊞ (x1 ⊞ (x2 ⊞ x3))`` and the last the left comb.
    """
    _check_cap(n, cap)
    return list(_trees(0, n - 1))


def left_comb(n: int) -> AssocTree:
    tree: AssocTree = Leaf(0)
    for i in range(1, n):
        tree = Node(tree, Leaf(i))
    return tree


def evaluate_tree(tree: AssocTree, operands: Sequence[TrOFN]) -> TrOFN:
    if tree.size != len(operands):
        raise ValueError(f"tree has {tree.size} leaves but {len(operands)} operands given")

    def go(t):
        if isinstance(t, Leaf):
            return operands[t.index]
        return revised_sum(go(t.left), go(t.right))

    return go(tree)


def left_fold_sum(operands: Sequence[TrOFN]) -> TrOFN:
    """``((x1 ⊞ x2) ⊞ x3) ⊞ ... ⊞ xn``."""
    if not operands:
        raise ValueError("left_fold_sum of an empty sequence")
    acc = operands[0]
    for x in operands[1:]:
        acc = revised_sum(acc, x)
    return acc


@dataclass(frozen=True)
class Witness:
    """One evaluation: operands taken in ``permutation`` order, then combined
    by ``tree`` (leaf ``i`` is the ``i``-th permuted operand). ``tree`` is None
    for a plain left fold."""

    permutation: tuple[int, ...]
    tree: Optional[AssocTree] = None
    tree_index: Optional[int] = None

    def sort_key(self):
        return (self.permutation, -1 if self.tree_index is None else self.tree_index)


@dataclass
class SpectrumEntry:
    value: TrOFN
    multiplicity: int = 0
    witnesses: list[Witness] = field(default_factory=list)


@dataclass
class Spectrum:
    entries: list[SpectrumEntry]
    total: int

    @property
    def values(self) -> list[TrOFN]:
        return [e.value for e in self.entries]

    @property
    def is_singleton(self) -> bool:
        return len(self.entries) == 1

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, value: TrOFN) -> SpectrumEntry:
        for e in self.entries:
            if e.value == value:
                return e
        raise KeyError(value)

    def __contains__(self, value):
        return any(e.value == value for e in self.entries)


def _collect(results: Iterator[tuple[TrOFN, Witness]]) -> Spectrum:
    grouped: dict[TrOFN, SpectrumEntry] = {}
    total = 0
    for value, witness in results:
        entry = grouped.setdefault(value, SpectrumEntry(value))
        entry.multiplicity += 1
        entry.witnesses.append(witness)
        total += 1
    entries = sorted(grouped.values(), key=lambda e: e.value.quadruple)
    for e in entries:
        e.witnesses.sort(key=Witness.sort_key)
    return Spectrum(entries, total)


def _all_tree_values(operands: Sequence[TrOFN]) -> list[TrOFN]:
    """Values of every association tree, in canonical tree order.

    Interval dynamic programming: each contiguous run is reduced once per
    bracketing instead of once per enclosing tree.
    """
    n = len(operands)
    table: dict[tuple[int, int], list[TrOFN]] = {(i, i): [x] for i, x in enumerate(operands)}
    for width in range(1, n):
        for lo in range(n - width):
            hi = lo + width
            table[lo, hi] = [
                revised_sum(left, right)
                for split in range(lo, hi)
                for left in table[lo, split]
                for right in table[split + 1, hi]
            ]
    return table[0, n - 1]


def association_spectrum(operands: Sequence[TrOFN], cap: int = DEFAULT_CAP) -> Spectrum:
    """Every bracketing of the operands in their given order."""
    n = len(operands)
    trees = enumerate_association_trees(n, cap)
    identity = tuple(range(n))
    values = _all_tree_values(operands)
    return _collect(
        (value, Witness(identity, tree, k)) for k, (tree, value) in enumerate(zip(trees, values))
    )


def _prefix_folds(operands: Sequence[TrOFN]) -> Iterator[tuple[tuple[int, ...], TrOFN]]:
    # Lexicographic permutations, sharing each prefix's partial fold.
    n = len(operands)
    used = [False] * n
    perm: list[int] = []

    def walk(acc):
        if len(perm) == n:
            yield tuple(perm), acc
            return
        for i in range(n):
            if used[i]:
                continue
            used[i] = True
            perm.append(i)
            yield from walk(operands[i] if acc is None else revised_sum(acc, operands[i]))
            perm.pop()
            used[i] = False

    yield from walk(None)


def permutation_spectrum(operands: Sequence[TrOFN], cap: int = DEFAULT_CAP) -> Spectrum:
    """Left fold over all ``n!`` orderings of the operands."""
    _check_cap(len(operands), cap)
    return _collect((value, Witness(perm)) for perm, value in _prefix_folds(operands))


def full_spectrum(
    operands: Sequence[TrOFN], cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET
) -> Spectrum:
    """Every (permutation, bracketing) pair: ``n! * catalan(n - 1)`` evaluations."""
    n = len(operands)
    _check_cap(n, cap)
    needed = math.factorial(n) * catalan(n - 1)
    if needed > budget:
        raise CapExceeded(f"{needed} evaluations exceeds budget {budget}")
    trees = enumerate_association_trees(n, cap)

    def results():
        for perm in itertools.permutations(range(n)):
            values = _all_tree_values([operands[i] for i in perm])
            for k, (tree, value) in enumerate(zip(trees, values)):
                yield value, Witness(perm, tree, k)

    return _collect(results())
