"""Sidon spaces, r-Sidon spaces, cyclic subspace codes and Sidon/B_r sets over finite fields."""

__version__ = "0.1.0"
