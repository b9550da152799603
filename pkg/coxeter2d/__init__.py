"""Two-dimensional Coxeter presentations of parabolic intersections in GL_{n+1}(F_2)."""

__version__ = "0.1.0"
