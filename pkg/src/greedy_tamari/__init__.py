"""Interval enumeration and generating functions for greedy and ordinary m-Tamari posets."""

__version__ = "0.1.0"
