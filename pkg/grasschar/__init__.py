"""Mod 2 cohomology rings of Grassmannians: construction and claim verification"""
__version__ = "1.0.0"
