#!/usr/bin/env python3
"""
Project Path Configuration

Centralized path management for the toolkit.
"""

import os
import sys
from pathlib import Path
from typing import Dict

from dotenv import load_dotenv


class ProjectPaths:
    """Centralized project path management."""

    def __init__(self):
        self.project_root = self._get_project_root()

        # Core directories
        self.tool_dir = self.project_root / "scripts" / "mw_toolkit"
        self.resources_dir = self.tool_dir / "resources"
        self.defaults_dir = self.resources_dir / "defaults"

        # User inputs
        self.graph_configs_dir = self.project_root / "graph_configs"
        self.graphs_dir = self.graph_configs_dir / "graphs"
        self.toolkit_config = self.graph_configs_dir / "toolkit.yaml"

    def _get_project_root(self) -> Path:
        """Get project root directory."""
        load_dotenv()
        env_root = os.getenv('MW_PROJECT_ROOT')
        if env_root:
            return Path(env_root)

        # scripts/mw_toolkit/config/paths.py
        return Path(__file__).resolve().parents[3]

    def get_certify_paths(self) -> Dict[str, Path]:
        """Get certificate-related paths."""
        return {
            'defaults': self.defaults_dir / "certify.yaml",
        }

    def get_montecarlo_paths(self) -> Dict[str, Path]:
        """Get Monte Carlo related paths."""
        return {
            'defaults': self.defaults_dir / "montecarlo.yaml",
        }

    def get_growth_paths(self) -> Dict[str, Path]:
        return {
            'defaults': self.defaults_dir / "asymptotics.yaml",
        }

    def get_graph_paths(self) -> Dict[str, Path]:
        """Get bundled graph inputs and the builder configuration."""
        return {
            'graphs': self.graphs_dir,
            'toolkit': self.toolkit_config,
        }

    def validate_paths(self) -> bool:
        """Validate that all required paths exist."""
        required_paths = [
            self.project_root,
            self.tool_dir,
            self.defaults_dir,
            self.graph_configs_dir,
        ]

        missing_paths = [str(path) for path in required_paths if not path.exists()]
        if missing_paths:
            print("Missing required directories:", file=sys.stderr)
            for path in missing_paths:
                print(f"  - {path}", file=sys.stderr)
            return False
        return True


# Global instance for easy access
project_paths = ProjectPaths()
