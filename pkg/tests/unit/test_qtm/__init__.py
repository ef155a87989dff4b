"""Tests for src.qtm module."""
