"""Exact invariants of combinatorial Hopf algebras of permutations, posets
and graphs: symmetric-function invariants, antipodes, nabla at q = 1 and
scheduling problems."""

__version__ = "0.1.0"
