# -*- coding: utf-8 -*-
"""Spectral flow of finite-dimensional Hermitian operator paths."""

__version__ = "0.1.0"
