#!/usr/bin/env python3
"""
Tutte Manager - Tutte polynomial workflows

Loads multigraph files and matroid descriptors, prints polynomials in
graded-lexicographic text and reports the transfer identity.
"""

import sys
from typing import Optional

from modules.config_utils import load_multigraph
from api.errors import DomainError, ResourceLimitError
from api.graphs import MultiGraph
from api.matroids import Matroid, parse_matroid
from api.permtutte import verify_transfer_identity
from api.tutte import merino_welsh_check, tutte_by_activities, tutte_deletion_contraction, tutte_matroid

METHODS = ('deletion-contraction', 'activities')


class TutteManager:
    """Tutte polynomial operations manager."""

    def __init__(self):
        self.GREEN = '\033[92m'
        self.YELLOW = '\033[93m'
        self.RED = '\033[91m'
        self.END = '\033[0m'

    def _status(self, message: str, color: str = '') -> None:
        end = self.END if color else ''
        print(f"{color}[Tutte] {message}{end}", file=sys.stderr)

    def _fail(self, message: str) -> None:
        print(f"{self.RED}[-] {message}{self.END}", file=sys.stderr)

    def load_matroid(self, descriptor: str) -> Matroid:
        return parse_matroid(descriptor, load_multigraph)

    def _print_check(self, polynomial) -> None:
        check = merino_welsh_check(polynomial)
        print(f"T(1,1) = {check.bases}")
        print(f"T(2,0) = {check.acyclic}")
        print(f"T(0,2) = {check.totally_cyclic}")
        print(f"max version: {'holds' if check.max_version_holds else 'fails'}")
        print(f"product version: {'holds' if check.product_version_holds else 'fails'}")

    def tutte_graph(self, graph: MultiGraph, method: str = 'deletion-contraction', check: bool = False) -> bool:
        """Print T_G for a multigraph."""
        try:
            if method == 'activities':
                polynomial = tutte_by_activities(graph)
            else:
                polynomial = tutte_deletion_contraction(graph)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Tutte polynomial: {e}")
            return False
        print(polynomial)
        if check:
            self._print_check(polynomial)
        return True

    def tutte_matroid(self, matroid: Matroid, check: bool = False) -> bool:
        """Print T_M for a matroid given by its rank oracle."""
        try:
            polynomial = tutte_matroid(matroid)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Tutte polynomial of {matroid.descriptor}: {e}")
            return False
        print(polynomial)
        if check:
            self._print_check(polynomial)
        return True

    def verify_transfer(self, graph: MultiGraph, name: Optional[str] = None) -> bool:
        """Compare T_G with the sum of T~ over the exchange graphs of all spanning trees."""
        try:
            report = verify_transfer_identity(graph)
        except (DomainError, ResourceLimitError) as e:
            self._fail(f"Transfer identity: {e}")
            return False
        label = f"{name}: " if name else ""
        if report.holds:
            print(f"{label}identity holds ({report.tree_count} spanning trees)")
            print(f"T = {report.tutte}")
            self._status(f"{label}identity holds", self.GREEN)
        else:
            print(f"{label}identity fails")
            print(f"T = {report.tutte}")
            print(f"sum = {report.transfer_sum}")
            print(f"residual = {report.residual}")
            self._status(f"{label}identity fails", self.RED)
        return report.holds
