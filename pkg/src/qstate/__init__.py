"""Quantum state values (qustrings)."""
