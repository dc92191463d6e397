"""Exact computations for the quantum metaplectic Howe duality in rank one."""

__version__ = "0.1.0"
