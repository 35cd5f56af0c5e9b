# Skew-polynomial cyclic codes and their duals
__version__ = "1.0.0"
