"""Tests for konane boards and rulesets."""
