"""Tests for the graph core."""
