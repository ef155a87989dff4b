"""Constructors for derived quantum functions."""
