"""
Data models for the inversio probability laboratory
"""
