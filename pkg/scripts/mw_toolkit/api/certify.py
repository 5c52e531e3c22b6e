"""
Lower-Bound Kernels and Inequality Certificates

All values are exact (Fraction, or QuadraticFieldNumber for the golden
parameters):

    gamma(x, s, d)        = (d+x)s / ((d+x)s + (d+1)x(1-s))
    G(d, x, s, g)         = ((d+x)s/(d+1) + x(1-s)) * (s - s g^d/(d+1))
    G(inf, x, s)          = (s + x(1-s)) s
    G2(d, x, s, g1, g2)   = G with g^d replaced by g1^min(2,d-1) g2^(d-min(2,d-1))

certify_idea runs the per-degree checks of the four successive ideas and
returns a CertificateReport; certify_circuit_interval and
degree_interval_scan cover the circuit-length lemma, and
certify_matroid_circuit_theorem checks its hypotheses on a concrete matroid.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import mpmath

from .errors import DomainError, InvalidArgumentError
from .field import QuadraticFieldNumber, mpf_to_fraction
from .graphs import BipartiteGraph
from .matroids import Matroid, circuits, dual
from .tutte import MerinoWelshCheck, merino_welsh_check, tutte_matroid

log = logging.getLogger(__name__)

DEFAULT_D0 = {1: 11, 2: 11, 3: 44, 4: 100}
CIRCUIT_EXACT_LIMIT = 6
CIRCUIT_PRECISION_BITS = 256
CIRCUIT_MARGIN = mpmath.mpf("1e-20")
DEGREE_SCAN_LIMIT = 1_000_000
DIRECT_CHECK_LIMIT = 16


def _exact(value):
    if isinstance(value, QuadraticFieldNumber):
        return value
    return Fraction(value)


@lru_cache(maxsize=None)
def _warn_low_x(x) -> None:
    log.warning("gamma evaluated at x=%s, below the x >= 2 regime of the product bound", x)


def gamma(x, s, d: int):
    """gamma_{x,s}(d); lies in [0, s] and is non-increasing in d for x >= 1."""
    x, s = _exact(x), _exact(s)
    if not 0 <= s <= 1:
        raise DomainError(f"s must lie in [0, 1], got {s}")
    if x < 1:
        raise DomainError(f"gamma needs x >= 1, got {x}")
    if d < 1:
        raise InvalidArgumentError(f"degree must be at least 1, got {d}")
    if x < 2:
        _warn_low_x(x)
    top = (d + x) * s
    bottom = top + (d + 1) * x * (1 - s)
    return top / bottom


def g_fn(d: int, x, s, gamma_value):
    if d < 1:
        raise InvalidArgumentError(f"degree must be at least 1, got {d}")
    x, s, gamma_value = _exact(x), _exact(s), _exact(gamma_value)
    return ((d + x) * s / (d + 1) + x * (1 - s)) * (s - s * gamma_value ** d / (d + 1))


def g_limit(x, s):
    x, s = _exact(x), _exact(s)
    if not 0 <= s <= 1:
        raise DomainError(f"s must lie in [0, 1], got {s}")
    return (s + x * (1 - s)) * s


def g2_fn(d: int, x, s, gamma1, gamma2):
    if d < 2:
        raise DomainError(f"G2 is applied for d >= 2 only, got d={d}")
    x, s = _exact(x), _exact(s)
    near = min(2, d - 1)
    correction = _exact(gamma1) ** near * _exact(gamma2) ** (d - near)
    return ((d + x) * s / (d + 1) + x * (1 - s)) * (s - s * correction / (d + 1))


def tail_condition(d: int, x, gamma_value) -> bool:
    """(x-1)/(x(d+2)) >= gamma^(d-1): G(d', x, s, gamma) is non-increasing from d on."""
    x, gamma_value = _exact(x), _exact(gamma_value)
    if d < 2:
        raise InvalidArgumentError(f"the tail condition needs d >= 2, got {d}")
    if not 0 < gamma_value < 1:
        raise DomainError(f"the tail condition needs 0 < gamma < 1, got {gamma_value}")
    if x <= 1:
        raise DomainError(f"the tail condition needs x > 1, got {x}")
    return (x - 1) / (x * (d + 2)) >= gamma_value ** (d - 1)


def tail_root(d: int, x) -> float:
    """((x-1)/(x(d+2)))^(1/(d-1)) as a float, for display next to gamma."""
    if d < 2:
        raise InvalidArgumentError(f"the tail root needs d >= 2, got {d}")
    x = float(_exact(x))
    return ((x - 1) / (x * (d + 2))) ** (1.0 / (d - 1))


# --- graph bounds ---

def _vertex_factors(graph: BipartiteGraph, x, s, low_side_a: bool) -> object:
    gammas = [gamma(x, s, graph.degree(v)) for v in range(graph.vertex_count)]
    bound = Fraction(1)
    for v in range(graph.vertex_count):
        d = graph.degree(v)
        if graph.in_part_a(v) == low_side_a:
            bound = bound * ((d + x) * s / (d + 1) + x * (1 - s))
        else:
            product = Fraction(1)
            for u in graph.adjacency[v]:
                product = product * gammas[u]
            bound = bound * (s - s / (d + 1) * product)
    return bound


def _check_bound_inputs(graph: BipartiteGraph, x, s) -> None:
    if x < 2:
        raise DomainError(f"the product bound is stated for x >= 2, got {x}")
    if not 0 <= s <= 1:
        raise DomainError(f"s must lie in [0, 1], got {s}")
    isolated = graph.isolated_vertices()
    if isolated:
        raise DomainError(f"the product bound needs no isolated vertices, vertex {isolated[0]} is isolated")


def theorem41_bound(graph: BipartiteGraph, x, s):
    """
    Lower bound on T~_H(x, 0): the product over A of ((d+x)s/(d+1) + x(1-s))
    times the product over B of (s - s/(d+1) * prod of gamma(d_w) over neighbours w).
    """
    x, s = _exact(x), _exact(s)
    _check_bound_inputs(graph, x, s)
    return _vertex_factors(graph, x, s, low_side_a=True)


def corollary_product_bound(graph: BipartiteGraph, x, s):
    """Lower bound on T~_H(x, 0) T~_H(0, x): the bound on H times the bound on H with parts swapped."""
    x, s = _exact(x), _exact(s)
    _check_bound_inputs(graph, x, s)
    return _vertex_factors(graph, x, s, low_side_a=True) * _vertex_factors(graph, x, s, low_side_a=False)


def min_degree_bound(degrees: Sequence[int], x, s, delta: int):
    """Product of G(d_v, x, s, gamma(delta)); bounds T~(x,0) T~(0,x) from below when every d_v >= delta."""
    if any(d < delta for d in degrees):
        raise DomainError(f"every degree must be at least delta={delta}")
    g = gamma(x, s, delta)
    bound = Fraction(1)
    for d in degrees:
        bound = bound * g_fn(d, x, s, g)
    return bound


# --- certificates ---

@dataclass(frozen=True)
class CertificateRow:
    """One checked quantity: name, degree label and the exact value(s) compared against 1."""

    check: str
    d: Optional[int]
    values: Tuple[object, ...]
    passed: bool
    label: str = ""
    strict: bool = False

    @property
    def degree_label(self) -> str:
        if self.label:
            return self.label
        return "inf" if self.d is None else str(self.d)


@dataclass(frozen=True)
class TailCheck:
    degree: Optional[int]
    gamma: object
    passed: bool
    licenses: str


@dataclass(frozen=True)
class LimitCheck:
    values: Tuple[object, ...]
    passed: bool
    licenses: str


@dataclass
class CertificateReport:
    name: str
    parameters: dict
    rows: List[CertificateRow] = field(default_factory=list)
    tail: Optional[TailCheck] = None
    limit: Optional[LimitCheck] = None
    failing_reason: Optional[str] = None
    columns: Tuple[str, ...] = ("G",)
    notes: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        checks = [row.passed for row in self.rows]
        if self.tail is not None:
            checks.append(self.tail.passed)
        if self.limit is not None:
            checks.append(self.limit.passed)
        return all(checks) and self.failing_reason is None

    def first_failure(self) -> Optional[str]:
        for row in self.rows:
            if not row.passed:
                return f"{row.check} failed at d={row.degree_label}"
        if self.tail is not None and not self.tail.passed:
            return self.tail.licenses
        if self.limit is not None and not self.limit.passed:
            return f"limit check failed: {self.limit.licenses}"
        return self.failing_reason

    def finalize(self) -> "CertificateReport":
        if self.failing_reason is None and not self.verdict:
            self.failing_reason = self.first_failure()
        return self


def _leaf_factor_exponent(d: int) -> int:
    return min(2, d - 1)


def certify_idea(idea: int, x, s, d0: Optional[int] = None, include_d0: Optional[bool] = None) -> CertificateReport:
    """
    Run the checks of one idea and collect them in a report.

    Rows cover d up to d0 (Ideas 1-3) or d0-1 (Idea 4) unless include_d0 says
    otherwise; the tail condition with gamma(1) and the limit checks license
    every larger degree.
    """
    if idea not in DEFAULT_D0:
        raise InvalidArgumentError(f"idea must be one of 1..4, got {idea}")
    x, s = _exact(x), _exact(s)
    d0 = DEFAULT_D0[idea] if d0 is None else d0
    include_d0 = (idea != 4) if include_d0 is None else include_d0
    if x <= 1:
        raise DomainError(f"certificates need x > 1, got {x}")
    if not 0 < s < 1:
        raise DomainError(f"certificates need 0 < s < 1, got {s}")
    if d0 < 3:
        raise InvalidArgumentError(f"d0 must be at least 3, got {d0}")
    last = d0 if include_d0 else d0 - 1

    columns = ("G",) if idea in (1, 2) else ("G", "G*leaf")
    report = CertificateReport(
        name=f"idea{idea}",
        parameters={"idea": idea, "x": x, "s": s, "d0": d0, "last_degree": last},
        columns=columns,
    )
    gamma_one = gamma(x, s, 1)
    gamma_two = gamma(x, s, 2)

    if idea == 1:
        for d in range(1, last + 1):
            value = g_fn(d, x, s, gamma_one)
            report.rows.append(CertificateRow("G", d, (value,), value >= 1))
    elif idea == 2:
        value = g_fn(1, x, s, gamma_two)
        report.rows.append(CertificateRow("G_leaf", 1, (value,), value >= 1, label="1*"))
        for d in range(2, last + 1):
            value = g_fn(d, x, s, gamma_one)
            report.rows.append(CertificateRow("G", d, (value,), value >= 1))
    else:
        for d in range(2, last + 1):
            main = g_fn(d, x, s, gamma_one) if idea == 3 else g2_fn(d, x, s, gamma_one, gamma_two)
            product = main * g_fn(1, x, s, gamma(x, s, d)) ** _leaf_factor_exponent(d)
            report.rows.append(CertificateRow("G" if idea == 3 else "G2", d, (main, product),
                                              main >= 1 and product >= 1))
        star_value = (x ** 3 + x ** 2 + x) / 16
        report.rows.append(CertificateRow("pendant_star", None, (star_value,), star_value > 1,
                                          label="S4", strict=True))

    report.tail = _tail_check(x, gamma_one, last)
    limit = g_limit(x, s)
    if idea in (1, 2):
        report.limit = LimitCheck((limit,), limit >= 1,
                                  "G(inf) >= 1 with the tail bounds every d > d0 below by G(inf)")
    else:
        leaf = g_fn(1, x, s, gamma(x, s, last))
        product = limit * leaf ** 2
        report.limit = LimitCheck((limit, product), limit >= 1 and product >= 1,
                                  f"G(inf) and G(inf)*G(1, gamma({last}))^2 bound every d > {last}, "
                                  "since gamma(d) <= gamma(d0) for d >= d0")
    return report.finalize()


def _tail_check(x, gamma_value, last: int) -> TailCheck:
    if not 0 < gamma_value < 1 or x <= 1:
        return TailCheck(None, gamma_value, False, "tail condition is undefined for these parameters")
    for d in range(2, last + 1):
        if tail_condition(d, x, gamma_value):
            root = f"root {tail_root(d, x):.4f} >= gamma {float(gamma_value):.4f}"
            return TailCheck(d, gamma_value, True,
                             f"tail condition holds at d={d} ({root}):"
                             f" G(d', x, s, gamma(1)) is non-increasing for d' >= {d}")
    return TailCheck(None, gamma_value, False, f"tail condition fails for every d <= {last}; d0 is too small")


# --- circuit-length lemma ---

def circuit_interval(k) -> Tuple[int, int]:
    k = Fraction(k)
    low = math.ceil(k + 1)
    high = math.floor(k ** 4 - 2 * k ** 2 - 1)
    return low, high


def certify_circuit_interval(k) -> CertificateReport:
    """
    With s = 1 - 1/k^2, check G(d, 2, s, s) >= 1 for every integer d in
    [ceil(k+1), floor(k^4 - 2k^2 - 1)].

    Exact for k <= 6; beyond that 256-bit floats with a 1e-20 margin.
    """
    k = _exact(k)
    if isinstance(k, QuadraticFieldNumber) or k < 4:
        raise DomainError(f"the circuit interval lemma needs a rational k >= 4, got {k}")
    s = 1 - 1 / (k * k)
    low, high = circuit_interval(k)
    exact = k <= CIRCUIT_EXACT_LIMIT
    report = CertificateReport(
        name="circuit_interval",
        parameters={"k": k, "s": s, "low": low, "high": high, "exact": exact},
    )
    if exact:
        values = _exact_circuit_sweep(s, low, high)
    else:
        values = _float_circuit_sweep(s, low, high)

    failing = [(d, value, passed) for d, value, passed in values if not passed]
    margin_row = min(values, key=lambda item: item[1])
    chosen = {low, high, margin_row[0]}
    if failing:
        chosen.add(failing[0][0])
    for d, value, passed in values:
        if d in chosen:
            report.rows.append(CertificateRow("G(d,2,s,s)", d, (value,), passed))
    report.notes.append(f"checked {len(values)} degrees; smallest value at d={margin_row[0]}")
    if failing:
        report.failing_reason = f"G(d,2,s,s) < 1 at d={failing[0][0]}"
    return report.finalize()


def _exact_circuit_sweep(s: Fraction, low: int, high: int) -> List[Tuple[int, Fraction, bool]]:
    results = []
    power = s ** low
    for d in range(low, high + 1):
        value = ((d + 2) * s / (d + 1) + 2 * (1 - s)) * (s - s * power / (d + 1))
        results.append((d, value, value >= 1))
        power *= s
    return results


def _float_circuit_sweep(s: Fraction, low: int, high: int) -> List[Tuple[int, Fraction, bool]]:
    results = []
    with mpmath.workprec(CIRCUIT_PRECISION_BITS):
        s_value = mpmath.mpf(s.numerator) / s.denominator
        power = s_value ** low
        for d in range(low, high + 1):
            value = ((d + 2) * s_value / (d + 1) + 2 * (1 - s_value)) * (s_value - s_value * power / (d + 1))
            results.append((d, mpf_to_fraction(value),
                            value >= 1 + CIRCUIT_MARGIN))
            power *= s_value
    return results


@dataclass(frozen=True)
class DegreeScanResult:
    d_max: int
    immediate_failure: bool
    last_value: object


def degree_interval_scan(s, delta: int, limit: int = DEGREE_SCAN_LIMIT) -> DegreeScanResult:
    """Largest D with G(d, 2, s, gamma_{2,s}(delta)) > 1 for all delta <= d <= D."""
    s = _exact(s)
    if not 0 < s < 1:
        raise DomainError(f"the degree scan needs 0 < s < 1, got {s}")
    if delta < 1:
        raise InvalidArgumentError(f"delta must be at least 1, got {delta}")
    g = gamma(2, s, delta)
    d = delta
    value = g_fn(d, 2, s, g)
    if not value > 1:
        return DegreeScanResult(delta - 1, True, value)
    last_value = value
    while d < limit:
        value = g_fn(d + 1, 2, s, g)
        if not value > 1:
            break
        d += 1
        last_value = value
    return DegreeScanResult(d, False, last_value)


@dataclass
class CircuitTheoremReport:
    matroid: str
    ell: int
    upper: int
    circuit_lengths: List[int]
    dual_circuit_lengths: List[int]
    violation: Optional[str] = None
    direct_check: Optional[MerinoWelshCheck] = None

    @property
    def hypotheses_hold(self) -> bool:
        return self.violation is None

    @property
    def summary(self) -> str:
        if self.violation is not None:
            return f"hypotheses fail: {self.violation}"
        return ("hypotheses verified: the circuit-length criterion applies,"
                " so T_M(2,0) T_M(0,2) >= T_M(1,1)^2")


def certify_matroid_circuit_theorem(matroid: Matroid, ell: int,
                                    direct_check_limit: int = DIRECT_CHECK_LIMIT) -> CircuitTheoremReport:
    """Check that every circuit of M and of its dual has length in [ell, (ell-2)^4]."""
    if ell < 6:
        raise DomainError(f"the circuit-length criterion needs ell >= 6, got {ell}")
    upper = (ell - 2) ** 4
    primal = circuits(matroid)
    cocircuits = circuits(dual(matroid))
    report = CircuitTheoremReport(
        matroid=matroid.descriptor,
        ell=ell,
        upper=upper,
        circuit_lengths=sorted({len(c) for c in primal}),
        dual_circuit_lengths=sorted({len(c) for c in cocircuits}),
    )
    for side, found in (("circuit", primal), ("dual circuit", cocircuits)):
        for circuit in found:
            if not ell <= len(circuit) <= upper:
                report.violation = (f"{side} {sorted(circuit)} has length {len(circuit)}, "
                                    f"outside [{ell}, {upper}]")
                break
        if report.violation:
            break
    if matroid.ground_size <= direct_check_limit:
        report.direct_check = merino_welsh_check(tutte_matroid(matroid))
    return report
