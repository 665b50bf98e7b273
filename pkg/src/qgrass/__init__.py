"""Exact combinatorics and symbolic algebra for torus-invariant primes of quantum grassmannians."""

from qgrass.laurent import LaurentInt, eval_at_one, neg_q_power

__all__ = ["LaurentInt", "eval_at_one", "neg_q_power"]
__version__ = "0.1.0"
