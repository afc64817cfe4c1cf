"""Tests for game terms, structural operations and scores."""
