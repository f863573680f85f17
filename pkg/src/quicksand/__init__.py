"""Exact solver, verifier and play environment for hidden-ideal search on posets."""

from .engine import best_first, chain_first_query, decision_tree, feasible, qk_value
from .gridalg import grid_q2, solve_grid
from .numerics import binomial_sum, tau
from .poset import (FinitePoset, StaircaseShape, make_chain, make_grid,
                    make_product, make_trivial)
from .strategy import count_strategies, is_strategy, optimal_q2, q2_cost, regions

__all__ = [
    "best_first", "binomial_sum", "chain_first_query", "count_strategies",
    "decision_tree", "feasible", "FinitePoset", "grid_q2", "is_strategy",
    "make_chain", "make_grid", "make_product", "make_trivial", "optimal_q2",
    "q2_cost", "qk_value", "regions", "solve_grid", "StaircaseShape", "tau",
]

__version__ = "0.1.0"
