"""Numerical spectral toolkit for the quantum damped oscillator."""
