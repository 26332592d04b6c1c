"""Exact computations with G-equivariant fusion categories and genus-zero G-modular functors."""

__version__ = "0.1.0"
