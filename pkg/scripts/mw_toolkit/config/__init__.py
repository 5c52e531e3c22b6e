#!/usr/bin/env python3
"""
Configuration Package

Centralized path and defaults management for the toolkit.
"""

from .paths import project_paths
from .config_factory import config_factory

__all__ = ['project_paths', 'config_factory']
