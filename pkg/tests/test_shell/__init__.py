"""Tests for notation and command handlers."""
