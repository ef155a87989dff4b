"""Tests for src.io module."""
