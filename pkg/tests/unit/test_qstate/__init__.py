"""Tests for src.qstate module."""
