"""Tests for ffcount."""
