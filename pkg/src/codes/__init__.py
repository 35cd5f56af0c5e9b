"""
Code families: the generic Hamming-extension machinery and its constacyclic,
skew Reed-Solomon and convolutional instances
"""
