"""Tests for rational languages."""
