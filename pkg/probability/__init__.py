"""
Probability kernels for the inversio laboratory
"""
