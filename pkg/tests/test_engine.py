import random

import pytest

from conftest import random_poset, slow_qk
from quicksand.engine import (Descent, Leaf, Node, best_first,
                              chain_first_query, decision_tree, feasible,
                              qk_value, replay_tree)
from quicksand.numerics import binomial_sum, tau
from quicksand.poset import FinitePoset, make_chain, make_grid, make_trivial


class TestValueExamples:
    def test_three_element_posets(self):
        # trivial, one strict pair, vee, chain: values 3, 2, 3, 2 for k >= 2
        lam0 = make_trivial(3)
        lam1 = FinitePoset.from_pairs(3, [(1, 0)])
        lam2 = FinitePoset.from_pairs(3, [(1, 0), (2, 0)])
        lam3 = make_chain(3)
        for k in (2, 3, 4):
            assert qk_value(lam0, k) == 3
            assert qk_value(lam1, k) == 2
            assert qk_value(lam2, k) == 3
            assert qk_value(lam3, k) == 2
        for lam in (lam0, lam1, lam2, lam3):
            assert qk_value(lam, 1) == 3

    def test_grid_values(self):
        assert qk_value(make_grid(5, 7), 2) == 8
        assert qk_value(make_grid(6, 6), 2) == 9

    def test_empty(self):
        assert qk_value(make_grid(0, 0), 5) == 0
        assert qk_value(make_trivial(0), 3) == 0

    def test_small_sizes(self):
        for k in (1, 2, 3):
            assert qk_value(make_grid(1, 1), k) == 1
            assert qk_value(make_grid(1, 2), k) == 2 if k == 1 else True
        assert qk_value(make_chain(2), 2) == 2


class TestClosedForms:
    def test_chain_equals_tau(self):
        for k in range(1, 6):
            for n in range(0, 80):
                assert qk_value(make_chain(n), k) == tau(k, n)

    def test_trivial_equals_size(self):
        for k in range(1, 5):
            for n in range(0, 10):
                assert qk_value(make_trivial(n), k) == n

    def test_k1_is_size(self):
        rng = random.Random(5)
        for _ in range(20):
            p = random_poset(rng, rng.randint(0, 8))
            assert qk_value(p, 1) == p.size

    def test_bounds_random_posets(self):
        rng = random.Random(99)
        for _ in range(120):
            p = random_poset(rng, rng.randint(1, 10))
            for k in (1, 2, 3, 4):
                v = qk_value(p, k)
                assert tau(k, p.size) <= v <= p.size

    def test_transpose_invariance(self):
        rng = random.Random(3)
        for _ in range(40):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            s = make_grid(m, n)
            for k in (2, 3):
                assert qk_value(s, k) == qk_value(s.transpose(), k)

    def test_matches_slow_reference(self):
        rng = random.Random(42)
        for _ in range(40):
            p = random_poset(rng, rng.randint(1, 7))
            for k in (1, 2, 3):
                assert qk_value(p, k) == slow_qk(p, k)

    def test_grid_matches_slow_reference(self):
        from quicksand.poset import grid_to_poset
        for m, n in [(2, 2), (2, 3), (3, 3), (2, 5), (3, 4)]:
            g = make_grid(m, n)
            for k in (2, 3):
                assert qk_value(g, k) == slow_qk(grid_to_poset(g), k)

    def test_irregular_staircases_match_slow_reference(self):
        from conftest import random_shape
        from quicksand.poset import grid_to_poset
        rng = random.Random(555)
        checked = 0
        while checked < 60:
            s = random_shape(rng, 5, 6)
            if s.is_empty() or s.size > 16 or s.is_rectangle():
                continue
            p = grid_to_poset(s)
            for k in (1, 2, 3):
                assert qk_value(s, k) == slow_qk(p, k), (s.widths, k)
            checked += 1


class TestBestFirst:
    def test_chain3_middle(self):
        # brute force over all first queries with the slow reference
        p = make_chain(3)
        best = {
            u for u in range(3)
            if 1 + max(slow_qk(p.not_above(u), 2), slow_qk(p.strictly_above(u), 1))
            == slow_qk(p, 2)
        }
        assert best == {1}
        assert best_first(p, 2) == {1}

    def test_grid_57_contains_44(self):
        assert (4, 4) in best_first(make_grid(5, 7), 2)

    def test_trivial_symmetry(self):
        for n in (1, 3, 5):
            assert best_first(make_trivial(n), 2) == set(range(n))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            best_first(make_trivial(0), 2)


class TestDecisionTree:
    def test_single_cell(self):
        t = decision_tree(make_grid(1, 1), 2)
        assert isinstance(t, Node)
        assert isinstance(t.on_negative, Leaf)
        assert t.cost() == 1

    def test_chain100_root(self):
        t = decision_tree(make_grid(1, 100), 2)
        assert t.query == (1, 92)
        assert t.cost() == 14
        tp = decision_tree(make_chain(100), 2)
        assert tp.query == 91  # 0-based position 92

    def test_k1_is_descent(self):
        t = decision_tree(make_grid(2, 2), 1)
        assert isinstance(t, Descent)
        assert len(t.order) == 4

    def _replay_all(self, shape, k):
        tree = decision_tree(shape, k)
        value = qk_value(shape, k)
        ideals = [None] + list(shape.cells())
        worst = 0
        for hidden in ideals:
            def contains(cell, h=hidden):
                return h is not None and h[0] >= cell[0] and h[1] >= cell[1]
            queries, positives, found = replay_tree(tree, contains, k)
            assert positives <= k
            assert queries <= value
            assert found == hidden
            worst = max(worst, queries)
        assert worst == value

    def test_replay_66(self):
        self._replay_all(make_grid(6, 6), 2)

    def test_replay_assorted(self):
        for m, n, k in [(2, 2, 2), (3, 4, 2), (5, 7, 2), (3, 3, 3), (1, 9, 2)]:
            self._replay_all(make_grid(m, n), k)

    def test_replay_general_posets(self):
        rng = random.Random(17)
        for _ in range(25):
            p = random_poset(rng, rng.randint(1, 7))
            for k in (2, 3):
                tree = decision_tree(p, k)
                value = qk_value(p, k)
                worst = 0
                for hidden in p.ideals():
                    def contains(e, h=hidden):
                        return h is not None and p.geq(h, e)
                    queries, positives, found = replay_tree(tree, contains, k)
                    assert positives <= k
                    assert queries <= value
                    assert found == hidden
                    worst = max(worst, queries)
                assert worst == value

    def test_descent_orders_non_increasing(self):
        def check(tree):
            if isinstance(tree, Descent):
                for i, a in enumerate(tree.order):
                    for b in tree.order[i + 1:]:
                        assert not (b[0] >= a[0] and b[1] >= a[1] and b != a)
            elif isinstance(tree, Node):
                check(tree.on_negative)
                check(tree.on_positive)
        check(decision_tree(make_grid(4, 5), 2))


class TestFeasible:
    def test_66_budgets(self):
        g = make_grid(6, 6)
        assert feasible(g, 2, 8) is False
        assert feasible(g, 2, 9) is True

    def test_size_budget_always_feasible(self):
        rng = random.Random(1)
        for _ in range(30):
            p = random_poset(rng, rng.randint(1, 8))
            k = rng.randint(1, 3)
            assert feasible(p, k, p.size) is True

    def test_matches_value_on_grids(self):
        for m in range(1, 7):
            for n in range(m, 7):
                g = make_grid(m, n)
                v = qk_value(g, 2)
                for b in range(0, v + 3):
                    assert feasible(g, 2, b) == (v <= b)

    def test_matches_value_on_random_posets(self):
        rng = random.Random(8)
        for _ in range(40):
            p = random_poset(rng, rng.randint(1, 9))
            for k in (2, 3):
                v = qk_value(p, k)
                for b in (v - 1, v, v + 1):
                    assert feasible(p, k, b) == (v <= b)


class TestChainFirstQuery:
    def test_examples(self):
        assert chain_first_query(100, 2) == 92
        assert chain_first_query(1, 2) == 1
        assert chain_first_query(1, 5) == 1
        assert chain_first_query(45, 2) == 37

    def test_formula(self):
        for k in (2, 3, 4):
            for n in range(1, 200):
                assert chain_first_query(n, k) == binomial_sum(k, tau(k, n) - 1) + 1
