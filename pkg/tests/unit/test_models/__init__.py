"""Tests for src.models module."""
