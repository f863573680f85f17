import random

import pytest

from conftest import (brute_regions, brute_strategies, grid_geq, random_poset,
                      random_shape)
from quicksand.engine import qk_value
from quicksand.poset import make_grid, make_trivial
from quicksand.strategy import (count_strategies, is_strategy,
                                non_increasing_order, optimal_q2, q2_cost,
                                regions)

NONOP = [(2, 6), (5, 2), (1, 5), (3, 3), (2, 1), (1, 4), (1, 1)]
SOLVED = [(4, 4), (2, 5), (1, 4), (1, 3), (4, 1), (1, 2), (2, 1), (1, 1)]
EX66 = [(5, 3), (4, 2), (2, 4), (3, 1), (1, 4), (2, 1), (1, 2), (1, 1)]


class TestRegions:
    def test_reference_sequence_sizes(self):
        g = make_grid(5, 7)
        assert [len(r) for r in regions(g, NONOP)] == [8, 4, 6, 4, 9, 1, 3]

    def test_single_maximal(self):
        g = make_grid(3, 3)
        regs = regions(g, [(3, 3)])
        assert regs == [{(3, 3)}]

    def test_2x2_derived(self):
        g = make_grid(2, 2)
        regs = regions(g, [(2, 2), (1, 1)])
        assert [len(r) for r in regs] == [1, 3]
        # brute-force set algebra oracle
        oracle = brute_regions(list(g.cells()), grid_geq, [(2, 2), (1, 1)])
        assert regs == oracle

    def test_matches_brute_force_random(self):
        rng = random.Random(31)
        for _ in range(100):
            s = random_shape(rng, 5, 6)
            if s.is_empty():
                continue
            cells = list(s.cells())
            seq = rng.sample(cells, rng.randint(1, min(5, len(cells))))
            assert regions(s, seq) == brute_regions(cells, grid_geq, seq)


class TestIsStrategy:
    def test_reference_examples(self):
        g = make_grid(5, 7)
        assert is_strategy(g, SOLVED)
        assert is_strategy(g, NONOP)
        assert is_strategy(make_grid(6, 6), EX66)

    def test_uncovered_minimum_fails(self):
        # a chain missing its minimum leaves the bottom uncovered
        g = make_grid(1, 4)
        assert not is_strategy(g, [(1, 4), (1, 2)])

    def test_empty_region_fails(self):
        g = make_grid(2, 2)
        # (2, 2) is above (1, 1)'s... (2,2) >= (1,1): querying (1,1) then (2,2)
        assert not is_strategy(g, [(1, 1), (2, 2)])


class TestQ2Cost:
    def test_reference_values(self):
        assert q2_cost(make_grid(5, 7), NONOP) == 13
        assert q2_cost(make_grid(5, 7), SOLVED) == 8
        assert q2_cost(make_grid(6, 6), EX66) == 9

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            q2_cost(make_grid(2, 2), [])

    def test_every_shot(self):
        # any non-increasing arrangement is a strategy costing the full size
        rng = random.Random(12)
        for _ in range(40):
            s = random_shape(rng, 4, 5)
            if s.is_empty():
                continue
            order = non_increasing_order(s)
            assert is_strategy(s, order)
            assert q2_cost(s, order) == s.size

    def test_single_shot(self):
        # a one-element strategy exists iff the poset has a minimum
        for m, n in [(1, 5), (3, 3), (2, 4)]:
            g = make_grid(m, n)
            assert q2_cost(g, [(1, 1)]) == g.size

    def test_concatenation_rule(self):
        rng = random.Random(77)
        for _ in range(120):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            g = make_grid(m, n)
            _, witness = optimal_q2(g)
            seq = list(witness)
            if len(seq) < 2:
                continue
            s = rng.randint(1, len(seq) - 1)
            v, w = seq[:s], seq[s:]
            rest = g.not_above_seq(v)
            assert q2_cost(g, seq) == max(q2_cost(g, v), q2_cost(rest, w) + s)


class TestOptimal:
    def test_grid_values(self):
        assert optimal_q2(make_grid(5, 7))[0] == 8
        assert optimal_q2(make_grid(6, 6))[0] == 9

    def test_single_element(self):
        value, witness = optimal_q2(make_grid(1, 1))
        assert value == 1 and witness == ((1, 1),)

    def test_witness_is_optimal_strategy(self):
        rng = random.Random(4)
        for _ in range(30):
            m, n = rng.randint(1, 5), rng.randint(1, 6)
            g = make_grid(m, n)
            value, witness = optimal_q2(g)
            assert is_strategy(g, witness)
            assert q2_cost(g, witness) == value == qk_value(g, 2)

    def test_random_posets_match_engine(self):
        rng = random.Random(21)
        for _ in range(60):
            p = random_poset(rng, rng.randint(1, 8))
            value, witness = optimal_q2(p)
            assert value == qk_value(p, 2)
            assert is_strategy(p, witness)
            assert q2_cost(p, witness) == value

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            optimal_q2(make_grid(0, 3))


class TestCount:
    def test_single_element(self):
        assert count_strategies(make_grid(1, 1), 1, "exact") == 1

    def test_brute_force_cross_check(self):
        for m, n in [(1, 3), (2, 2), (2, 3), (3, 3)]:
            g = make_grid(m, n)
            cells = list(g.cells())
            for budget in range(1, g.size + 1):
                brute = brute_strategies(cells, grid_geq, budget)
                assert count_strategies(g, budget, "atmost") == len(brute)
        # exact = atmost(t) - atmost(t-1)
        g = make_grid(2, 3)
        cells = list(g.cells())
        for t in range(2, 7):
            exact = len(brute_strategies(cells, grid_geq, t)) - len(
                brute_strategies(cells, grid_geq, t - 1)
            )
            assert count_strategies(g, t, "exact") == exact

    def test_shape_and_mask_paths_agree_on_staircases(self):
        from conftest import random_shape
        from quicksand.poset import grid_to_poset
        rng = random.Random(9)
        checked = 0
        while checked < 40:
            s = random_shape(rng, 5, 6)
            if s.is_empty() or s.size > 14:
                continue
            target = qk_value(s, 2)
            assert (
                count_strategies(s, target, "atmost")
                == count_strategies(grid_to_poset(s), target, "atmost")
            )
            checked += 1

    def test_general_poset_counts(self):
        p = make_trivial(3)
        # only strategies on an antichain are permutations swept one by one
        assert count_strategies(p, 3, "atmost") == 6
        assert count_strategies(p, 2, "atmost") == 0

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            count_strategies(make_grid(1, 1), 1, "roughly")
