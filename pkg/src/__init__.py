"""Application root package"""
