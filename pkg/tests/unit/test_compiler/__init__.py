"""Tests for src.compiler module."""
