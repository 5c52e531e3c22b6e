#!/usr/bin/env python3
"""
Growth Manager - Asymptotic growth constants

Prints closed-form growth constants next to their golden-section cross-check
and runs the H_{n,n,n} probe with defaults from resources/defaults/asymptotics.yaml.
"""

import json
import sys
from typing import Any, Dict, Optional

from modules.config_utils import get_nested_value, load_yaml_file
from config.config_factory import config_factory
from api.asymptotics import (ProbeReport, counterexample_probe, growth_hnnn, growth_hnnn_product,
                             growth_k_ab, x0_root)
from api.errors import DomainError, InvalidArgumentError, ResourceLimitError
from api.field import parse_exact, to_fraction
from api.utils import get_worker_count

FAMILIES = ('kab', 'hnnn', 'x0')


class GrowthManager:
    """Growth constant operations manager."""

    def __init__(self):
        config_paths = config_factory.create_growth_config()
        self.defaults_path = config_paths['defaults_path']
        self._defaults = None

        self.GREEN = '\033[92m'
        self.YELLOW = '\033[93m'
        self.RED = '\033[91m'
        self.END = '\033[0m'

    @property
    def defaults(self) -> Dict[str, Any]:
        if self._defaults is None:
            self._defaults = load_yaml_file(str(self.defaults_path)) or {}
        return self._defaults

    @property
    def cross_check_tolerance(self) -> float:
        return float(get_nested_value(self.defaults, ('Cross Check Tolerance',), 1e-8))

    @property
    def search_settings(self) -> Dict[str, Any]:
        return {
            'tol': float(get_nested_value(self.defaults, ('Golden Section', 'Tolerance'), 1e-12)),
            'iterations': int(get_nested_value(self.defaults, ('Golden Section', 'Iterations'), 200)),
        }

    @property
    def newton_start(self) -> float:
        return float(get_nested_value(self.defaults, ('Newton', 'Start'), 2.3))

    def _status(self, message: str, color: str = '') -> None:
        end = self.END if color else ''
        print(f"{color}[Growth] {message}{end}", file=sys.stderr)

    def _fail(self, message: str) -> None:
        print(f"{self.RED}[-] {message}{self.END}", file=sys.stderr)

    def growth(self, family: str, x=None, alpha=None, side: Optional[str] = None) -> bool:
        """Print value, maximizer, branch and cross-check residual; false when the residual is too large."""
        if family not in FAMILIES:
            raise InvalidArgumentError(f"family must be one of {FAMILIES}, got {family!r}")
        if family == 'x0':
            root = x0_root(self.newton_start)
            print(f"x0 = {root:.12f}")
            print(f"p(x0) = {root ** 3 - 9 * root + 9:.3e}")
            return True
        if x is None:
            raise InvalidArgumentError("growth needs --x")
        x_value = float(to_fraction(parse_exact(x)))
        try:
            if family == 'kab':
                if alpha is None:
                    raise InvalidArgumentError("the kab family needs --alpha")
                result = growth_k_ab(float(to_fraction(parse_exact(alpha))), x_value, **self.search_settings)
            else:
                result = growth_hnnn(x_value, side or 'x0', **self.search_settings)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Growth constant: {e}")
            return False
        print(f"value = {result.value:.15g}")
        print(f"maximizer = {result.maximizer:.15g}")
        print(f"branch = {result.branch}")
        print(f"residual = {result.residual:.3e}")
        if family == 'hnnn':
            product = growth_hnnn_product(x_value)
            print(f"product of both sides = {product:.15g}")
        agrees = result.residual <= self.cross_check_tolerance
        if not agrees:
            self._status(f"closed form and numeric maximum differ by {result.residual:.3e}", self.RED)
        return agrees

    def probe(self, n: Optional[int] = None, x=None, samples: Optional[int] = None, seed: Optional[int] = None,
              workers: Optional[int] = None, integrate_leaves: Optional[bool] = None) -> ProbeReport:
        settings = get_nested_value(self.defaults, ('Counterexample Probe',), {}) or {}
        n = n if n is not None else int(settings.get('N', 30))
        x = parse_exact(x if x is not None else settings.get('X', '2'))
        samples = samples if samples is not None else int(settings.get('Samples', 10_000_000))
        seed = seed if seed is not None else int(settings.get('Seed', 0))
        if integrate_leaves is None:
            integrate_leaves = bool(settings.get('Integrate Leaves', True))
        workers = workers or get_worker_count()
        return counterexample_probe(n, to_fraction(x), samples, seed, workers, integrate_leaves)

    def counterexample(self, n: Optional[int] = None, x=None, samples: Optional[int] = None,
                       seed: Optional[int] = None, workers: Optional[int] = None) -> bool:
        """Print T~(x,0) T~(0,x) on H_{n,n,n} with its rate and the limiting rate."""
        try:
            report = self.probe(n, x, samples, seed, workers)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Counterexample probe: {e}")
            return False
        print(json.dumps(probe_to_dict(report), indent=2))
        return True


def probe_to_dict(report: ProbeReport) -> Dict[str, Any]:
    payload = {
        'n': report.n,
        'x': report.x,
        'exact': report.exact,
        'x0_value': report.x0_value,
        'zero_x_value': report.zero_x_value,
        'product': report.product,
        'rate': report.rate,
        'limit_rate': report.limit_rate,
    }
    if report.exact_product is not None:
        payload['exact_product'] = f"{report.exact_product.numerator}/{report.exact_product.denominator}"
    if report.x0_estimate is not None:
        payload['x0_estimate'] = report.x0_estimate.to_dict()
        payload['zero_x_estimate'] = report.zero_x_estimate.to_dict()
    if report.rate is not None and report.limit_rate is not None:
        payload['rate_gap'] = abs(report.rate - report.limit_rate)
    return payload
