"""Cluster X-varieties of q-Painleve type: seeds, mutations, toric data, catalogs."""

__version__ = "0.1.0"
