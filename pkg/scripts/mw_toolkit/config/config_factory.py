#!/usr/bin/env python3
"""
Configuration Factory

Provides configuration dictionaries for the Managers.
"""

from .paths import project_paths


class ConfigFactory:
    """Factory for creating configuration objects."""

    @staticmethod
    def create_certify_config():
        """Create certificate configuration."""
        paths = project_paths.get_certify_paths()
        return {
            'defaults_path': paths['defaults'],
        }

    @staticmethod
    def create_montecarlo_config():
        """Create Monte Carlo configuration."""
        paths = project_paths.get_montecarlo_paths()
        return {
            'defaults_path': paths['defaults'],
        }

    @staticmethod
    def create_growth_config():
        """Create asymptotics configuration."""
        paths = project_paths.get_growth_paths()
        return {
            'defaults_path': paths['defaults'],
        }

    @staticmethod
    def get_graph_paths():
        """Get graph input paths."""
        return project_paths.get_graph_paths()


# Global factory instance
config_factory = ConfigFactory()
