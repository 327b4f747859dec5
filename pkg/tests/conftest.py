"""Shared pytest configuration (keeps tests/ importable for _oracles)."""
