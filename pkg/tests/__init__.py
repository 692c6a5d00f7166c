"""
Test package for artin_mazur.
"""
