#!/usr/bin/env python3
"""
Growth Management Module

Growth constants of K_{a,b} and H_{n,n,n}, the threshold root x0 and the
finite-n counterexample probe.
"""

from .growth import GrowthManager

__all__ = ['GrowthManager']
