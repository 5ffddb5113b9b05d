"""Async background workers"""
