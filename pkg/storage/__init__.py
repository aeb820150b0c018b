"""
Configuration lookup and report files
"""
