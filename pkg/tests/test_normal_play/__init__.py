"""Tests for the Normal-play engine."""
