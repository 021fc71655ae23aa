"""
Command-line client.
"""
