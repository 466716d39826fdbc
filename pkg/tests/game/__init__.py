"""Tests for the token game."""
