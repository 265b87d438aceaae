"""Tests for kappa-terms and exponents."""
