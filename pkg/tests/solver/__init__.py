"""Tests for the exact solver and verification."""
