#!/usr/bin/env python3
"""
Tutte Management Module

Tutte polynomials of multigraph files and matroid descriptors, the
Merino-Welsh evaluation check and the transfer identity.
"""

from .tutte import TutteManager

__all__ = ['TutteManager']
