"""Tests for the broom-turan package."""
