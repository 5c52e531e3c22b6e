"""
Configuration Utilities - YAML/JSON loading and config merging for the Managers.
Also turns graph input files into kernel objects.
"""
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from api.errors import InvalidArgumentError
from api.graphs import BipartiteGraph, MultiGraph, bipartite_from_dict, multigraph_from_dict


def load_yaml_file(filepath: str) -> Optional[Dict[str, Any]]:
    """Load a YAML file and return its content."""
    try:
        with open(filepath, 'r', encoding='utf-8') as file:
            return yaml.safe_load(file)
    except FileNotFoundError:
        print(f"Error: YAML file not found at {filepath}", file=sys.stderr)
        return None
    except yaml.YAMLError as e:
        print(f"Error parsing YAML file {filepath}: {e}", file=sys.stderr)
        return None
    except Exception as e:
        print(f"Unexpected error loading YAML file {filepath}: {e}", file=sys.stderr)
        return None


def load_json_file(filepath: str) -> Optional[Any]:
    """Load a JSON file and return its content."""
    try:
        with open(filepath, 'r', encoding='utf-8') as file:
            return json.load(file)
    except FileNotFoundError:
        print(f"Error: JSON file not found at {filepath}", file=sys.stderr)
        return None
    except json.JSONDecodeError as e:
        print(f"Error parsing JSON file {filepath}: {e}", file=sys.stderr)
        return None
    except Exception as e:
        print(f"Unexpected error loading JSON file {filepath}: {e}", file=sys.stderr)
        return None


def merge_configs(base_config: Dict[str, Any], override_config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Recursively merge two configurations with override taking precedence.
    Used for merging YAML defaults with command-line overrides.
    """
    if not isinstance(base_config, dict) or not isinstance(override_config, dict):
        return override_config if override_config else base_config

    merged = base_config.copy()
    for key, value in override_config.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_configs(merged[key], value)
        elif value is not None:
            merged[key] = value
    return merged


def get_nested_value(config_dict: Dict[str, Any], keys: Tuple[Any, ...], default: Any = None) -> Any:
    """Get a nested value from a dictionary using a tuple of keys."""
    if not isinstance(config_dict, dict) or not keys:
        return default

    value = config_dict
    for key in keys:
        if isinstance(value, dict) and key in value:
            value = value[key]
        else:
            return default
    return value


def validate_configuration_files(file_paths: List[str]) -> Tuple[bool, List[str]]:
    """
    Validate that all required configuration files exist.
    Returns tuple of (all_exist, missing_files).
    """
    missing_files = [f for f in file_paths if not Path(f).exists()]
    return len(missing_files) == 0, missing_files


def _require_json(filepath: str) -> Any:
    data = load_json_file(filepath)
    if data is None:
        raise InvalidArgumentError(f"could not read graph file {filepath}")
    return data


def load_bipartite_graph(filepath: str) -> BipartiteGraph:
    """Read a bipartite graph file ({"a_size", "b_size", "edges"})."""
    data = _require_json(filepath)
    try:
        return bipartite_from_dict(data)
    except InvalidArgumentError as e:
        raise InvalidArgumentError(f"{filepath}: {e}") from e


def load_multigraph(filepath: str) -> MultiGraph:
    """Read a multigraph file ({"vertices", "edges"})."""
    data = _require_json(filepath)
    try:
        return multigraph_from_dict(data)
    except InvalidArgumentError as e:
        raise InvalidArgumentError(f"{filepath}: {e}") from e
