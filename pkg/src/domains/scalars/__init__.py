"""Exact and high-precision scalars"""
