# scripts/__init__.py
"""
Utility scripts for the nzflow nowhere-zero flow toolkit
"""

__version__ = "1.0.0"
