#!/usr/bin/env python3
"""
Certify Management Module

This module provides the certificate workflows:
- Per-idea degree sweeps with tail and limit checks
- Circuit-interval sweeps and the degree-interval scan
- The circuit-length criterion on concrete matroids
- Table, CSV, JSON and certificate-file rendering
"""

from .certify import CertifyManager

__all__ = ['CertifyManager']
