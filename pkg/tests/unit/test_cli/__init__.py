"""Tests for src.cli module."""
