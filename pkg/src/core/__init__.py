"""Cross-cutting configuration"""
