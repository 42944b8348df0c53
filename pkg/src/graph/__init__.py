"""Weighted graph values and the node-removal decomposition."""
