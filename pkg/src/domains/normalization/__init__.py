"""Weight-by-weight normalization of defining series"""
