import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import any_trofns, uniform_operand_lists
from trofn import (
    CapExceeded,
    Leaf,
    Node,
    TrOFN,
    association_spectrum,
    catalan,
    enumerate_association_trees,
    evaluate_tree,
    full_spectrum,
    left_comb,
    left_fold_sum,
    make_tofn,
    permutation_spectrum,
)
from trofn.spectrum import format_tree, leaves, tree_from_nested, tree_to_nested

A = make_tofn(10, 40, 70)
B = make_tofn(110, 100, 60)
C = make_tofn(50, 65, 105)
D = make_tofn(120, 90, 67)
ABCD = [A, B, C, D]


def T(a, b, c):
    return make_tofn(a, b, c)


def by_value(spec):
    return {e.value: e.multiplicity for e in spec.entries}


def oracle_counts(counts):
    return {TrOFN(*q): k for q, k in counts.items()}


class TestCatalan:
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (3, 5), (4, 14), (7, 429)])
    def test_values(self, n, expected):
        assert catalan(n) == expected

    def test_closed_form(self):
        for n in range(30):
            assert catalan(n) == oracles.catalan_closed(n)

    def test_negative(self):
        with pytest.raises(ValueError):
            catalan(-1)


class TestTrees:
    def test_four_operands_canonical_order(self):
        names = "ABCD"
        got = [format_tree(t, names) for t in enumerate_association_trees(4)]
        assert got == [
            "A ⊞ (B ⊞ (C ⊞ D))",
            "A ⊞ ((B ⊞ C) ⊞ D)",
            "(A ⊞ B) ⊞ (C ⊞ D)",
            "(A ⊞ (B ⊞ C)) ⊞ D",
            "((A ⊞ B) ⊞ C) ⊞ D",
        ]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_brute_force(self, n):
        trees = enumerate_association_trees(n)
        nested = [tree_to_nested(t) for t in trees]
        as_tuples = {_tuplify(x) for x in nested}
        assert len(trees) == catalan(n - 1)
        assert len(as_tuples) == len(trees)
        assert as_tuples == oracles.bracketings(n)
        for t in trees:
            assert leaves(t) == list(range(n))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_association_trees(9)
        assert len(enumerate_association_trees(9, cap=9)) == 1430

    def test_nested_round_trip(self):
        for t in enumerate_association_trees(5):
            assert tree_from_nested(tree_to_nested(t)) == t

    def test_left_comb_is_last(self):
        assert enumerate_association_trees(5)[-1] == left_comb(5)


def _tuplify(x):
    return x if isinstance(x, int) else tuple(_tuplify(y) for y in x)


class TestEvaluate:
    def test_four_operand_bracketings(self):
        trees = dict(zip(["r3", "r21", "mid", "l12", "l3"], enumerate_association_trees(4)))
        assert evaluate_tree(trees["l3"], ABCD) == T(290, 295, 312)
        assert evaluate_tree(trees["l12"], ABCD) == T(290, 295, 302)
        assert evaluate_tree(trees["r21"], ABCD) == T(290, 295, 302)
        assert evaluate_tree(trees["r3"], ABCD) == T(275, 295, 302)
        # Often quoted as T(275; 295; 302), which needs A ⊞ B = T(120; 140; 130).
        # The exact sum is T(120; 140; 140), giving the value below.
        assert evaluate_tree(trees["mid"], ABCD) == T(275, 295, 312)

    def test_leaf(self):
        assert evaluate_tree(Leaf(0), [A]) == A

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            evaluate_tree(Node(Leaf(0), Leaf(1)), ABCD)


class TestLeftFold:
    def test_forward_and_reverse_orders(self):
        assert left_fold_sum(ABCD) == T(290, 295, 312)
        assert left_fold_sum([D, C, B, A]) == T(275, 295, 302)
        assert left_fold_sum([A]) == A

    def test_empty(self):
        with pytest.raises(ValueError):
            left_fold_sum([])

    @given(st.lists(any_trofns(), min_size=1, max_size=6))
    def test_equals_left_comb(self, xs):
        assert left_fold_sum(xs) == evaluate_tree(left_comb(len(xs)), xs)


class TestAssociationSpectrum:
    def test_example_operands(self):
        spec = association_spectrum(ABCD)
        assert spec.total == 5
        expected = oracle_counts(oracles.association_counts([x.quadruple for x in ABCD]))
        assert by_value(spec) == expected
        assert by_value(spec) == {
            T(275, 295, 302): 1,
            T(275, 295, 312): 1,
            T(290, 295, 302): 2,
            T(290, 295, 312): 1,
        }

    def test_witness_trees_evaluate_to_entry(self):
        for entry in association_spectrum(ABCD).entries:
            for w in entry.witnesses:
                assert evaluate_tree(w.tree, ABCD) == entry.value
                assert w.permutation == (0, 1, 2, 3)

    def test_positive_operands_collapse(self):
        spec = association_spectrum([TrOFN(0, 1, 2, 3), TrOFN(1, 2, 3, 4), TrOFN(2, 3, 4, 5)])
        assert spec.is_singleton
        assert spec.entries[0].value == TrOFN(3, 6, 9, 12)
        assert spec.total == 2

    def test_single(self):
        spec = association_spectrum([A])
        assert spec.values == [A] and spec.entries[0].multiplicity == 1

    def test_entries_sorted(self):
        values = association_spectrum(ABCD).values
        assert values == sorted(values)

    @settings(max_examples=60)
    @given(st.lists(any_trofns(), min_size=1, max_size=5))
    def test_matches_oracle(self, xs):
        spec = association_spectrum(xs)
        assert by_value(spec) == oracle_counts(oracles.association_counts([x.quadruple for x in xs]))
        assert spec.total == catalan(len(xs) - 1)


class TestPermutationSpectrum:
    def test_example_operands(self):
        spec = permutation_spectrum(ABCD)
        assert spec.total == 24
        assert by_value(spec) == {T(275, 295, 302): 4, T(290, 295, 302): 16, T(290, 295, 312): 4}
        assert by_value(spec) == oracle_counts(oracles.permutation_counts([x.quadruple for x in ABCD]))

    def test_source_grouping_discrepancies(self):
        # Hand-tabulated groupings have listed D⊞A⊞B⊞C under T(275; 295; 302)
        # and B⊞C⊞A⊞D under T(290; 295; 312); exact folds put both at 302.
        spec = permutation_spectrum(ABCD)
        perms = {e.value: {w.permutation for w in e.witnesses} for e in spec.entries}
        assert (3, 0, 1, 2) in perms[T(290, 295, 302)]
        assert (1, 2, 0, 3) in perms[T(290, 295, 302)]
        assert perms[T(290, 295, 312)] == {(0, 1, 2, 3), (0, 1, 3, 2), (1, 0, 2, 3), (1, 0, 3, 2)}
        assert perms[T(275, 295, 302)] == {(2, 3, 0, 1), (2, 3, 1, 0), (3, 2, 0, 1), (3, 2, 1, 0)}

    def test_witnesses_sorted_and_complete(self):
        spec = permutation_spectrum(ABCD)
        seen = []
        for e in spec.entries:
            ps = [w.permutation for w in e.witnesses]
            assert ps == sorted(ps)
            assert all(w.tree is None for w in e.witnesses)
            seen += ps
        assert sorted(seen) == sorted(itertools.permutations(range(4)))

    def test_identity_permutation_is_left_fold(self):
        spec = permutation_spectrum(ABCD)
        ident = [e.value for e in spec.entries if any(w.permutation == (0, 1, 2, 3) for w in e.witnesses)]
        assert ident == [left_fold_sum(ABCD)]

    def test_crisp_collapse(self):
        assert permutation_spectrum([TrOFN.crisp(k) for k in (1, 5, -2, 7)]).is_singleton

    def test_cap(self):
        with pytest.raises(CapExceeded):
            permutation_spectrum([A] * 9)
        with pytest.raises(CapExceeded):
            permutation_spectrum(ABCD, cap=3)

    def test_empty(self):
        with pytest.raises(ValueError):
            permutation_spectrum([])


class TestFullSpectrum:
    def test_example_operands(self):
        spec = full_spectrum(ABCD)
        assert spec.total == 120
        assert by_value(spec) == oracle_counts(oracles.full_counts([x.quadruple for x in ABCD]))
        values = set(spec.values)
        assert set(association_spectrum(ABCD).values) <= values
        assert set(permutation_spectrum(ABCD).values) <= values

    def test_witnesses_evaluate(self):
        for e in full_spectrum(ABCD).entries:
            for w in e.witnesses:
                assert evaluate_tree(w.tree, [ABCD[i] for i in w.permutation]) == e.value

    def test_pair_is_commutative(self):
        spec = full_spectrum([TrOFN(1, 3, 7, 8), TrOFN(5, 4, 4, 2)])
        assert spec.total == 2 and spec.is_singleton

    def test_budget(self):
        with pytest.raises(CapExceeded):
            full_spectrum(ABCD, budget=119)
        assert full_spectrum(ABCD, budget=120).total == 120

    @settings(max_examples=50)
    @given(uniform_operand_lists(max_size=4))
    def test_uniform_collapse(self, xs):
        assert full_spectrum(xs).is_singleton


def test_count_law_small():
    xs = [T(1, 2, 4), T(5, 3, 1), T(0, 0, 9), T(7, 7, 2), T(3, 4, 5)]
    for n in range(1, 6):
        assert full_spectrum(xs[:n]).total == math.factorial(n) * catalan(n - 1)


def test_determinism():
    a = full_spectrum(ABCD)
    b = full_spectrum(ABCD)
    assert [(e.value, e.multiplicity, e.witnesses) for e in a.entries] == [
        (e.value, e.multiplicity, e.witnesses) for e in b.entries
    ]
