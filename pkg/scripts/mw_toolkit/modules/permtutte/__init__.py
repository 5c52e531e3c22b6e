#!/usr/bin/env python3
"""
Permutation Tutte Management Module

This module provides:
- Exact permutation Tutte polynomials of bipartite graph files
- Seeded, worker-count independent Monte Carlo estimates
- The gluing inequality check and the random conjecture scan
"""

from .permtutte import PermTutteManager

__all__ = ['PermTutteManager']
