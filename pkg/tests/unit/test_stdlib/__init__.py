"""Tests for src.stdlib module."""
