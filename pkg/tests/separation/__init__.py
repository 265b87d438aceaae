"""Tests for separation."""
