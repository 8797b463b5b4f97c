"""Computational toolkit for Dyer-Lashof operations and TAQ Hurewicz maps."""
