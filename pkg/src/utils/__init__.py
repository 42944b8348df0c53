"""Utility modules."""

