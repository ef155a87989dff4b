"""Schematic calculus of quantum polynomial-time functions."""
