"""Tests for factorizations."""
