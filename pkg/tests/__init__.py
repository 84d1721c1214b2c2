"""Tests for the Hilbert self-dual code toolkit."""
