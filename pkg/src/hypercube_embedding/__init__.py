"""Hamiltonian embeddings of hypercubes: construction, verification and search."""

__version__ = "1.0.0"
