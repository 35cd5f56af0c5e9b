"""
Algebra layer: finite fields, skew polynomials and exact linear algebra
"""
