"""Tests for universe predicates and enumeration."""
