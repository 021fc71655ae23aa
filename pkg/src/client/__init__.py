"""
Client namespace.
"""
