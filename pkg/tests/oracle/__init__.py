"""Tests for the brute-force oracle."""
