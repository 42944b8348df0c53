"""MWIS toolkit - core source code."""
