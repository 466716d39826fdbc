"""Tests for the hardness generators."""
