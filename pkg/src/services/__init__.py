"""Pure services"""
