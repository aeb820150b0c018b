"""
Rendering and table components shared by the CLI and the web pages
"""
