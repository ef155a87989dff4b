"""Unit tests for src modules."""
