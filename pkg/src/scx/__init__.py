"""Exact-arithmetic engine for S-complex concordance invariants."""

__version__ = "0.1.0"
