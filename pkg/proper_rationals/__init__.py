"""Proper rationals - exact rational arithmetic and integrality verdicts with witnesses."""
