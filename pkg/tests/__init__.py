# tests/__init__.py
"""
Test suite for the nzflow nowhere-zero flow toolkit
"""

__version__ = "1.0.0"
