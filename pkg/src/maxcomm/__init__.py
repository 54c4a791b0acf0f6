"""Exact structure theory of maximal commutative subrings of M_n(D)."""
