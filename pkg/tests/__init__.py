"""Tests for parity sumsets."""
