"""Root cluster calculus over finite permutation groups"""
__version__ = "0.1.0"
