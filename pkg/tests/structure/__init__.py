"""Tests for reverse-compatibility and the counterexample."""
