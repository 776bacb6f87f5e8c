"""Alliance polynomials of finite simple graphs."""

__version__ = "0.1.0"
