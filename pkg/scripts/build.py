#!/usr/bin/env python3
"""
Build Script Factory - Dynamically loads the reproduction builder based on YAML config
"""
import sys
import os
import yaml
import importlib.util


def get_root_dir():
    """Get the root directory of the repository."""
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load_toolkit_config():
    """Load and return the toolkit builder configuration."""
    config_path = os.path.join(get_root_dir(), 'graph_configs', 'toolkit.yaml')

    try:
        with open(config_path, 'r') as file:
            config = yaml.safe_load(file)
            return config['Toolkit']
    except (FileNotFoundError, KeyError, TypeError) as e:
        print(f"Config error: {e}.")
        sys.exit(1)


def get_available_tools():
    """Get list of tool directories that ship a build.py."""
    scripts_path = os.path.join(get_root_dir(), 'scripts')
    available = []
    for item in os.listdir(scripts_path):
        tool_path = os.path.join(scripts_path, item)
        if os.path.isdir(tool_path) and os.path.exists(os.path.join(tool_path, 'build.py')):
            available.append(item)
    return sorted(available)


def create_builder(tool, output_dir=None):
    """Factory function to create the tool's ReproductionBuilder."""
    tool_path = os.path.join(get_root_dir(), 'scripts', tool)
    build_file_path = os.path.join(tool_path, 'build.py')

    if not os.path.exists(build_file_path):
        available = get_available_tools()
        raise FileNotFoundError(
            f"Tool {tool} not found. Available tools: {', '.join(available)}"
        )

    spec = importlib.util.spec_from_file_location(f"build_{tool}", build_file_path)
    build_module = importlib.util.module_from_spec(spec)

    # The tool imports its own api/modules/config packages
    if tool_path not in sys.path:
        sys.path.insert(0, tool_path)

    spec.loader.exec_module(build_module)
    try:
        builder_class = build_module.ReproductionBuilder
    except AttributeError:
        raise ImportError(f"ReproductionBuilder class not found in {build_file_path}")
    return builder_class(output_dir=output_dir)


def main():
    """Main execution function."""
    toolkit_config = load_toolkit_config()
    tool = toolkit_config.get('name', 'mw_toolkit')
    output = toolkit_config.get('Output', 'results')
    if not os.path.isabs(output):
        output = os.path.join(get_root_dir(), output)

    print(f"Requested {tool} reproduction into {output}")

    try:
        builder = create_builder(tool, output)
        return 0 if builder.build() else 1
    except KeyboardInterrupt:
        print("\nOperation cancelled by user")
        return 130
    except Exception as e:
        print(f"Error: {e}")
        return 1


if __name__ == '__main__':
    sys.exit(main())
