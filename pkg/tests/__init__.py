"""Tests for the pcube package."""
