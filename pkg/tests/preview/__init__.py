"""Tests for DOT previews."""
