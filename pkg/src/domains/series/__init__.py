"""Truncated real formal power series in (z, z̄, u)"""
