"""Tests for finite semigroups."""
