"""Fock and Macmahon representations of the quantum toroidal gl(1) algebra."""

__version__ = "0.1.0"
