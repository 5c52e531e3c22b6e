#!/usr/bin/env python3
"""
PermTutte Manager - Permutation Tutte polynomial workflows

Monte Carlo and conjecture-scan parameters come from
resources/defaults/montecarlo.yaml; MW_THREADS caps the worker pool.
"""

import json
import sys
from typing import Any, Dict, Optional

from modules.config_utils import get_nested_value, load_yaml_file
from config.config_factory import config_factory
from api.errors import DomainError, ResourceLimitError
from api.field import parse_exact, to_fraction
from api.graphs import BipartiteGraph, bipartite_to_dict
from api.permtutte import (check_gluing, conjecture_scan, fkg_lower_bound, perm_tutte_exact,
                           perm_tutte_mc)
from api.utils import get_worker_count


class PermTutteManager:
    """Permutation Tutte operations manager with YAML configuration support."""

    def __init__(self):
        config_paths = config_factory.create_montecarlo_config()
        self.defaults_path = config_paths['defaults_path']
        self._defaults = None

        self.GREEN = '\033[92m'
        self.YELLOW = '\033[93m'
        self.RED = '\033[91m'
        self.END = '\033[0m'

    @property
    def defaults(self) -> Dict[str, Any]:
        """Get Monte Carlo defaults with lazy loading."""
        if self._defaults is None:
            self._defaults = load_yaml_file(str(self.defaults_path)) or {}
        return self._defaults

    def setting(self, section: str, key: str, fallback):
        return get_nested_value(self.defaults, (section, key), fallback)

    def _status(self, message: str, color: str = '') -> None:
        end = self.END if color else ''
        print(f"{color}[PermTutte] {message}{end}", file=sys.stderr)

    def _fail(self, message: str) -> None:
        print(f"{self.RED}[-] {message}{self.END}", file=sys.stderr)

    def exact(self, graph: BipartiteGraph, x=None, y=None, bounds: bool = False) -> bool:
        """Print T~_H and, when x and y are given, its exact value there."""
        try:
            polynomial = perm_tutte_exact(graph)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Exact permutation Tutte polynomial: {e}")
            return False
        print(polynomial)
        if x is not None and y is not None:
            x, y = parse_exact(x), parse_exact(y)
            value = polynomial.evaluate(x, y)
            print(f"T~({x}, {y}) = {value}")
            if bounds:
                try:
                    print(f"product bound = {fkg_lower_bound(graph, to_fraction(x), to_fraction(y))}")
                except DomainError as e:
                    self._status(f"no product bound: {e}", self.YELLOW)
        return True

    def monte_carlo(self, graph: BipartiteGraph, x, y, samples: Optional[int] = None, seed: Optional[int] = None,
                    workers: Optional[int] = None, integrate_leaves: Optional[bool] = None) -> bool:
        """Print the Monte Carlo estimate as {"mean", "stderr", "samples", "seed"}."""
        samples = samples if samples is not None else int(self.setting('Sampling', 'Samples', 100000))
        seed = seed if seed is not None else int(self.setting('Sampling', 'Seed', 0))
        if integrate_leaves is None:
            integrate_leaves = bool(self.setting('Sampling', 'Integrate Leaves', False))
        block_size = int(self.setting('Sampling', 'Block Size', 1 << 16))
        workers = workers or get_worker_count()
        try:
            estimate = perm_tutte_mc(graph, float(to_fraction(x)), float(to_fraction(y)), samples, seed,
                                     workers=workers, integrate_leaves=integrate_leaves, block_size=block_size)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Monte Carlo estimate: {e}")
            return False
        print(json.dumps(estimate.to_dict()))
        return True

    def gluing(self, first: BipartiteGraph, first_root: int, second: BipartiteGraph, second_root: int,
               x, y) -> bool:
        """Check the gluing inequality on two graphs joined at their roots."""
        try:
            report = check_gluing(first, first_root, second, second_root, to_fraction(x), to_fraction(y))
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Gluing: {e}")
            return False
        side = "A" if report.root_in_a else "B"
        factor = "x*" if report.root_in_a else ""
        print(f"shared vertex in part {side}; glued graph has {report.glued.vertex_count} vertices")
        print(f"T~_H1 = {report.first_value}")
        print(f"T~_H2 = {report.second_value}")
        print(f"T~_H = {report.glued_value}")
        print(f"{factor}T~_H = {report.lhs} {'>=' if report.holds else '<'} {report.rhs} = T~_H1 * T~_H2")
        print("inequality holds" if report.holds else "inequality fails")
        return report.holds

    def scan(self, min_degree: Optional[int] = None, trials: Optional[int] = None, seed: Optional[int] = None,
             max_vertices: Optional[int] = None) -> bool:
        """Search random graphs of a given minimum degree for T~(2,0) T~(0,2) < 1."""
        min_degree = min_degree or int(self.setting('Conjecture Scan', 'Min Degree', 2))
        trials = trials if trials is not None else int(self.setting('Conjecture Scan', 'Trials', 200))
        seed = seed if seed is not None else int(self.setting('Conjecture Scan', 'Seed', 0))
        max_vertices = max_vertices or int(self.setting('Conjecture Scan', 'Max Vertices', 10))
        try:
            violations = conjecture_scan(min_degree, trials, seed, max_vertices)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Conjecture scan: {e}")
            return False
        print(f"min degree {min_degree}: {len(violations)} of {trials} graphs with T~(2,0)*T~(0,2) < 1")
        for graph in violations:
            print(json.dumps(bipartite_to_dict(graph)))
        color = self.YELLOW if violations else self.GREEN
        self._status(f"scan finished with {len(violations)} violations", color)
        return True
