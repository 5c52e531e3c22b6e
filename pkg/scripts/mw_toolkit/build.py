#!/usr/bin/env python3
"""
Build Script - Regenerate every table, sweep and identity check

Writes the four idea tables (table/CSV/JSON/certificate), the circuit-interval
certificates, both degree scans, the transfer identities of the bundled
multigraphs and a growth-constant grid into one output directory.

Configuration:
- Output directory is read from: graph_configs/toolkit.yaml
- Per-idea parameters come from resources/defaults/certify.yaml
"""
import csv
import os
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from modules.config_utils import get_nested_value, load_json_file, load_yaml_file
from modules.certify import CertifyManager
from modules.growth import GrowthManager
from config.paths import project_paths
from api.asymptotics import SQRT3, growth_hnnn, growth_hnnn_product, x0_root
from api.certify import certify_circuit_interval, degree_interval_scan
from api.errors import ToolkitError
from api.field import parse_exact
from api.graphs import multigraph_from_dict
from api.permtutte import verify_transfer_identity

GROWTH_GRID = (1.2, 1.5, SQRT3, 2.0, 2.2, 2.3, 2.5, 3.0)


class ReproductionBuilder:
    """
    Main class for regenerating the published tables and checks.
    """

    def __init__(self, output_dir: Optional[str] = None, include_slow: bool = True):
        """Initialize manager instances and the output directory."""
        self.certify_manager = CertifyManager()
        self.growth_manager = GrowthManager()
        self.include_slow = include_slow
        self.output_dir = Path(output_dir) if output_dir else self.default_output_dir()
        self.results = {}

        self.GREEN = '\033[92m'
        self.YELLOW = '\033[93m'
        self.RED = '\033[91m'
        self.BOLD = '\033[1m'
        self.END = '\033[0m'

    def banner(self):
        """Print a banner for the builder."""
        print("=========================================================")
        print("        MW Toolkit - Reproduction Builder")
        print("=========================================================")

    @staticmethod
    def default_output_dir() -> Path:
        config = load_yaml_file(str(project_paths.toolkit_config)) or {}
        output = get_nested_value(config, ('Toolkit', 'Output'), 'results')
        path = Path(output)
        return path if path.is_absolute() else project_paths.project_root / path

    def _write(self, name: str, content: str) -> None:
        with open(self.output_dir / name, 'w', encoding='utf-8') as handle:
            handle.write(content if content.endswith("\n") else content + "\n")

    def _record(self, step: str, passed: bool) -> None:
        self.results[step] = passed
        color = self.GREEN if passed else self.RED
        mark = '+' if passed else '-'
        print(f"{color}[{mark}] [Build] {step}: {'PASS' if passed else 'FAIL'}{self.END}")

    def build_ideas(self) -> None:
        manager = self.certify_manager
        for idea in (1, 2, 3, 4):
            report = manager.run_idea(idea)
            self._write(f"idea{idea}.txt", manager.format_table(report))
            self._write(f"idea{idea}.csv", manager.format_csv(report))
            self._write(f"idea{idea}.json", manager.format_json(report))
            self._write(f"idea{idea}.cert", manager.format_certificate(report))
            self._record(f"idea {idea}", report.verdict)

    def build_circuit_intervals(self) -> None:
        ks = get_nested_value(self.certify_manager.defaults, ('Circuit Interval', 'Reproduce K'), [4, 5, 6])
        for k in ks:
            if k >= 6 and not self.include_slow:
                print(f"{self.YELLOW}[Build] skipping circuit interval k={k}{self.END}")
                continue
            report = certify_circuit_interval(parse_exact(k))
            self._write(f"circuit_interval_k{k}.txt", self.certify_manager.format_table(report))
            self._write(f"circuit_interval_k{k}.cert", self.certify_manager.format_certificate(report))
            self._record(f"circuit interval k={k}", report.verdict)

    def build_degree_scans(self) -> None:
        scans = get_nested_value(self.certify_manager.defaults, ('Degree Scan', 'Reproduce'), []) or []
        lines = []
        for entry in scans:
            result = degree_interval_scan(parse_exact(entry['S']), int(entry['Delta']))
            lines.append(f"s={entry['S']} delta={entry['Delta']} D>={result.d_max}")
            self._record(f"degree scan s={entry['S']} delta={entry['Delta']}", not result.immediate_failure)
        self._write("degree_scans.txt", "\n".join(lines))

    def get_multigraph_files(self) -> List[Path]:
        """Bundled graph files in the multigraph format."""
        files = []
        graphs_dir = project_paths.graphs_dir
        if graphs_dir.exists():
            for graph_file in sorted(graphs_dir.glob('*.json')):
                data = load_json_file(str(graph_file))
                if isinstance(data, dict) and 'vertices' in data:
                    files.append(graph_file)
        return files

    def build_transfer(self) -> None:
        lines = []
        for graph_file in self.get_multigraph_files():
            graph = multigraph_from_dict(load_json_file(str(graph_file)))
            report = verify_transfer_identity(graph)
            lines.append(f"{graph_file.stem}: {'identity holds' if report.holds else 'identity fails'} "
                         f"({report.tree_count} spanning trees) T = {report.tutte}")
            self._record(f"transfer identity {graph_file.stem}", report.holds)
        self._write("transfer.txt", "\n".join(lines))

    def build_growth(self) -> None:
        with open(self.output_dir / "growth.csv", 'w', encoding='utf-8', newline='') as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["x", "x0_side", "x0_branch", "zero_x_side", "zero_x_branch", "product", "residual"])
            agrees = True
            for x in GROWTH_GRID:
                first = growth_hnnn(x, "x0", **self.growth_manager.search_settings)
                second = growth_hnnn(x, "0x", **self.growth_manager.search_settings)
                residual = max(first.residual, second.residual)
                agrees = agrees and residual <= self.growth_manager.cross_check_tolerance
                writer.writerow([f"{x:.12g}", f"{first.value:.15g}", first.branch, f"{second.value:.15g}",
                                 second.branch, f"{growth_hnnn_product(x):.15g}", f"{residual:.3e}"])
        self._write("x0.txt", f"x0 = {x0_root(self.growth_manager.newton_start):.12f}")
        self._record("growth constants", agrees)

    def build(self) -> bool:
        """Run every step; a failing step does not stop the others."""
        self.banner()
        self.output_dir.mkdir(parents=True, exist_ok=True)
        print(f"{self.BOLD}[Build] writing results to {self.output_dir}{self.END}")

        steps = [
            ("ideas", self.build_ideas),
            ("circuit intervals", self.build_circuit_intervals),
            ("degree scans", self.build_degree_scans),
            ("transfer identities", self.build_transfer),
            ("growth constants", self.build_growth),
        ]
        for name, step in steps:
            try:
                step()
            except ToolkitError as e:
                print(f"{self.RED}[-] [Build] {name}: {e}{self.END}")
                self.results[name] = False

        passed = all(self.results.values())
        color = self.GREEN if passed else self.RED
        print(f"{color}{self.BOLD}[Build] {sum(self.results.values())}/{len(self.results)} checks passed{self.END}")
        return passed
