"""Tests for comparison and distinguishing games."""
