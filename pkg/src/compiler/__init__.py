"""Compilation of QTMs into calculus terms."""
