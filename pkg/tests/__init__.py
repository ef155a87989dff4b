"""Test suite for squareqp-calculus."""
