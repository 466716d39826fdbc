"""Tests for common types and utilities."""
