#!/usr/bin/env python3
"""
Certify Manager - Exact inequality certificates

This module wraps the certify kernels with:
- YAML defaults per idea (x, s, d0, include-d0 flag)
- Parameter parsing to exact values
- Rendering as a per-degree table, CSV, JSON or a certificate file
"""

import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional

from modules.config_utils import get_nested_value, load_yaml_file, merge_configs
from config.config_factory import config_factory
from api.certify import (CertificateReport, CertificateRow, certify_circuit_interval, certify_idea,
                         certify_matroid_circuit_theorem, degree_interval_scan)
from api.errors import DomainError, InvalidArgumentError, ResourceLimitError
from api.field import QuadraticFieldNumber, format_exact, parse_exact, render_significant
from api.matroids import Matroid

OUTPUT_FORMATS = ('table', 'json', 'csv')


class CertifyManager:
    """Certificate operations manager with YAML defaults."""

    def __init__(self):
        """Initialize with centralized configuration paths."""
        config_paths = config_factory.create_certify_config()
        self.defaults_path = config_paths['defaults_path']

        self._defaults = None

        self.GREEN = '\033[92m'
        self.YELLOW = '\033[93m'
        self.RED = '\033[91m'
        self.BOLD = '\033[1m'
        self.END = '\033[0m'

    @property
    def defaults(self) -> Dict[str, Any]:
        """Get certificate defaults with lazy loading."""
        if self._defaults is None:
            self._defaults = load_yaml_file(str(self.defaults_path)) or {}
        return self._defaults

    @property
    def digits(self) -> int:
        return int(get_nested_value(self.defaults, ('Rendering', 'Digits'), 15))

    def _status(self, message: str, color: str = '') -> None:
        end = self.END if color else ''
        print(f"{color}[Certify] {message}{end}", file=sys.stderr)

    def _fail(self, message: str) -> None:
        print(f"{self.RED}[-] {message}{self.END}", file=sys.stderr)

    # --- parameters ---

    def idea_parameters(self, idea: int, x=None, s=None, d0: Optional[int] = None,
                        include_d0: Optional[bool] = None) -> Dict[str, Any]:
        """Merge the YAML defaults of an idea with explicit overrides and parse them exactly."""
        base = get_nested_value(self.defaults, ('Ideas', idea), {}) or {}
        merged = merge_configs(base, {'X': x, 'S': s, 'D0': d0, 'Include D0': include_d0})
        if merged.get('X') is None or merged.get('S') is None:
            raise InvalidArgumentError(f"idea {idea} needs --x and --s (no defaults found)")
        return {
            'x': parse_exact(merged['X']),
            's': parse_exact(merged['S']),
            'd0': merged.get('D0'),
            'include_d0': merged.get('Include D0'),
        }

    def run_idea(self, idea: int, x=None, s=None, d0: Optional[int] = None,
                 include_d0: Optional[bool] = None) -> CertificateReport:
        params = self.idea_parameters(idea, x, s, d0, include_d0)
        return certify_idea(idea, params['x'], params['s'], params['d0'], params['include_d0'])

    # --- rendering ---

    @staticmethod
    def _row_checks(row: CertificateRow, columns) -> List[tuple]:
        """(check name, value, passed) for every value a row compares against 1."""
        names = [row.check] + [f"{row.check}*{column.split('*', 1)[-1]}" for column in columns[1:]]
        checks = []
        for name, value in zip(names, row.values):
            passed = value > 1 if row.strict else value >= 1
            checks.append((name, value, passed))
        return checks

    def format_table(self, report: CertificateReport, digits: Optional[int] = None) -> str:
        """Degree column followed by one column per value, 15 significant digits."""
        digits = digits or self.digits
        width = digits + 6
        lines = [f"{'d':<6}" + "".join(f"{column:<{width}}" for column in report.columns).rstrip()]
        for row in report.rows:
            cells = "".join(f"{render_significant(value, digits):<{width}}" for value in row.values)
            lines.append(f"{row.degree_label:<6}{cells}".rstrip())
        if report.limit is not None:
            cells = "".join(f"{render_significant(value, digits):<{width}}" for value in report.limit.values)
            lines.append(f"{'inf':<6}{cells}".rstrip())
        for note in report.notes:
            lines.append(f"# {note}")
        if report.tail is not None:
            lines.append(f"# {report.tail.licenses}")
        lines.append(self._verdict_line(report))
        return "\n".join(lines)

    @staticmethod
    def _verdict_line(report: CertificateReport) -> str:
        if report.verdict:
            return "VERDICT PASS"
        return f"VERDICT FAIL ({report.failing_reason})"

    def format_csv(self, report: CertificateReport, digits: Optional[int] = None) -> str:
        digits = digits or self.digits
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["d", *report.columns, "passed"])
        for row in report.rows:
            writer.writerow([row.degree_label, *(render_significant(v, digits) for v in row.values), row.passed])
        if report.limit is not None:
            writer.writerow(["inf", *(render_significant(v, digits) for v in report.limit.values), report.limit.passed])
        return buffer.getvalue().rstrip("\n")

    def to_dict(self, report: CertificateReport, digits: Optional[int] = None) -> Dict[str, Any]:
        digits = digits or self.digits
        payload = {
            'name': report.name,
            'parameters': {key: _plain(value) for key, value in report.parameters.items()},
            'columns': list(report.columns),
            'rows': [
                {
                    'check': row.check,
                    'd': row.degree_label,
                    'values': [render_significant(v, digits) for v in row.values],
                    'exact': [format_exact(v) for v in row.values],
                    'passed': row.passed,
                }
                for row in report.rows
            ],
            'notes': list(report.notes),
            'verdict': 'PASS' if report.verdict else 'FAIL',
            'failing_reason': report.failing_reason,
        }
        if report.tail is not None:
            payload['tail'] = {
                'degree': report.tail.degree,
                'gamma': format_exact(report.tail.gamma),
                'passed': report.tail.passed,
                'licenses': report.tail.licenses,
            }
        if report.limit is not None:
            payload['limit'] = {
                'values': [render_significant(v, digits) for v in report.limit.values],
                'exact': [format_exact(v) for v in report.limit.values],
                'passed': report.limit.passed,
                'licenses': report.limit.licenses,
            }
        return payload

    def format_json(self, report: CertificateReport, digits: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(report, digits), indent=2)

    def format_certificate(self, report: CertificateReport) -> str:
        """One CHECK line per compared value, terminated by the VERDICT line."""
        lines = []
        for row in report.rows:
            for name, value, passed in self._row_checks(row, report.columns):
                lines.append(_check_line(name, row.degree_label, value, passed))
        if report.tail is not None:
            degree = report.tail.degree if report.tail.degree is not None else "none"
            lines.append(_check_line("tail", degree, report.tail.gamma, report.tail.passed))
        if report.limit is not None:
            for column, value in zip(report.columns, report.limit.values):
                lines.append(_check_line(f"limit_{column}", "inf", value, value >= 1))
        lines.append("VERDICT PASS" if report.verdict else "VERDICT FAIL")
        return "\n".join(lines) + "\n"

    def write_certificate(self, report: CertificateReport, path: str) -> bool:
        try:
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(self.format_certificate(report))
        except OSError as e:
            self._fail(f"Could not write certificate {path}: {e}")
            return False
        self._status(f"Certificate written to {path}")
        return True

    def render(self, report: CertificateReport, output_format: str = 'table', digits: Optional[int] = None) -> str:
        if output_format not in OUTPUT_FORMATS:
            raise InvalidArgumentError(f"format must be one of {OUTPUT_FORMATS}, got {output_format!r}")
        if output_format == 'json':
            return self.format_json(report, digits)
        if output_format == 'csv':
            return self.format_csv(report, digits)
        return self.format_table(report, digits)

    def emit(self, report: CertificateReport, output_format: str = 'table', digits: Optional[int] = None,
             certificate_path: Optional[str] = None) -> bool:
        """Print a report, optionally write its certificate, and return its verdict."""
        print(self.render(report, output_format, digits))
        if certificate_path and not self.write_certificate(report, certificate_path):
            return False
        if report.verdict:
            self._status(f"{report.name}: PASS", self.GREEN)
        else:
            self._status(f"{report.name}: FAIL - {report.failing_reason}", self.RED)
        return report.verdict

    # --- workflows ---

    def certify_idea(self, idea: int, x=None, s=None, d0: Optional[int] = None,
                     include_d0: Optional[bool] = None, output_format: str = 'table',
                     digits: Optional[int] = None, certificate_path: Optional[str] = None) -> bool:
        """Certify one idea and print it; returns the verdict."""
        try:
            report = self.run_idea(idea, x, s, d0, include_d0)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Idea {idea}: {e}")
            return False
        return self.emit(report, output_format, digits, certificate_path)

    def certify_circuit_interval(self, k, output_format: str = 'table', digits: Optional[int] = None,
                                 certificate_path: Optional[str] = None) -> bool:
        try:
            report = certify_circuit_interval(parse_exact(k))
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Circuit interval: {e}")
            return False
        params = report.parameters
        self._status(f"k={format_exact(params['k'])}: degrees {params['low']}..{params['high']}"
                     f" ({'exact' if params['exact'] else 'high precision'})")
        return self.emit(report, output_format, digits, certificate_path)

    def degree_scan(self, s, delta: int, limit: Optional[int] = None) -> bool:
        """Print the largest D with G(d, 2, s, gamma(delta)) > 1 on [delta, D]."""
        limit = limit or int(get_nested_value(self.defaults, ('Degree Scan', 'Limit'), 1_000_000))
        try:
            result = degree_interval_scan(parse_exact(s), delta, limit)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Degree scan: {e}")
            return False
        if result.immediate_failure:
            print(f"G({delta}, 2, s, gamma({delta})) = {render_significant(result.last_value, self.digits)} <= 1")
            print("VERDICT FAIL")
            return False
        capped = " (scan limit reached)" if result.d_max >= limit else ""
        print(f"s={s} delta={delta}: G > 1 for all {delta} <= d <= {result.d_max}{capped}")
        print(f"D >= {result.d_max}")
        return True

    def certify_matroid(self, matroid: Matroid, ell: int) -> bool:
        """Check the circuit-length hypotheses on a matroid and corroborate directly when small."""
        try:
            report = certify_matroid_circuit_theorem(matroid, ell)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Matroid {matroid.descriptor}: {e}")
            return False
        print(f"matroid: {report.matroid}")
        print(f"allowed circuit lengths: [{report.ell}, {report.upper}]")
        print(f"circuit lengths: {report.circuit_lengths}")
        print(f"dual circuit lengths: {report.dual_circuit_lengths}")
        passed = report.hypotheses_hold
        print(report.summary)
        if report.direct_check is not None:
            check = report.direct_check
            print(f"T(1,1)={check.bases} T(2,0)={check.acyclic} T(0,2)={check.totally_cyclic}")
            print(f"product version: {'holds' if check.product_version_holds else 'fails'}")
            if passed and not check.product_version_holds:
                passed = False
        print("VERDICT PASS" if passed else "VERDICT FAIL")
        return passed


def _plain(value):
    if isinstance(value, (Fraction, QuadraticFieldNumber)):
        return format_exact(value)
    return value


def _check_line(name: str, degree, value, passed: bool) -> str:
    return f"CHECK {name} d={degree} value={format_exact(value)} verdict={'PASS' if passed else 'FAIL'}"
