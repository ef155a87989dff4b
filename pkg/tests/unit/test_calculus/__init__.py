"""Tests for src.calculus module."""
