"""Tests for CLI interface components."""
