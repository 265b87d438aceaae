"""Tests for the free group."""
