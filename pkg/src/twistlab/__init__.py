"""Exact workbench for twisted monoidal structures: R-matrices, cosimplicial
cohomology of bialgebras and ring extensions, Hecke and crystal invariants."""

__version__ = "0.1.0"
