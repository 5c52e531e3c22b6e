"""
Growth Constants

Closed-form exponential growth constants of T~ along K_{a,b} and H_{n,n,n},
each cross-checked against golden-section maximisation of the objective it
comes from, plus the threshold root x0 of x^3 - 9(x-1) and a finite-n probe
of the H_{n,n,n} product.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple

from .errors import DomainError, InvalidArgumentError
from .graphs import h_abc
from .permtutte import MAX_EXACT_VERTICES, McEstimate, perm_tutte_exact, perm_tutte_mc

log = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
SQRT3 = math.sqrt(3)
GSS_ITERATIONS = 200
GSS_TOLERANCE = 1e-12
CROSS_CHECK_TOLERANCE = 1e-8
NEWTON_START = 2.3

SIDES = ("x0", "0x")


def maximize_unimodal(f: Callable[[float], float], lo: float, hi: float,
                      tol: float = GSS_TOLERANCE, iterations: int = GSS_ITERATIONS) -> Tuple[float, float]:
    """Golden-section search for the maximum of a unimodal f on [lo, hi]."""
    if not lo < hi:
        raise InvalidArgumentError(f"need lo < hi, got [{lo}, {hi}]")
    if tol <= 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    a, b = lo, hi
    c = b - (b - a) * INV_PHI
    d = a + (b - a) * INV_PHI
    fc, fd = f(c), f(d)
    for _ in range(iterations):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * INV_PHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * INV_PHI
            fd = f(d)
    # the ends are candidates too when the maximum sits on the boundary
    arg, value = max(((c, fc), (d, fd), (lo, f(lo)), (hi, f(hi))), key=lambda item: item[1])
    return arg, value


@dataclass(frozen=True)
class GrowthResult:
    value: float
    maximizer: float
    branch: str
    numeric_value: float
    numeric_maximizer: float

    @property
    def residual(self) -> float:
        return abs(self.value - self.numeric_value)

    @property
    def agrees(self) -> bool:
        return self.residual <= CROSS_CHECK_TOLERANCE


def growth_k_ab(alpha: float, x: float, tol: float = GSS_TOLERANCE,
                iterations: int = GSS_ITERATIONS) -> GrowthResult:
    """
    max over s in [0,1] of s^beta (s + x(1-s))^alpha with beta = 1 - alpha.

    Interior branch (beta < (x-1)/x): alpha^alpha beta^beta x/(x-1)^beta at
    s = beta x/(x-1); otherwise the maximum 1 sits at s = 1.
    """
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if x <= 1:
        raise DomainError(f"x must exceed 1, got {x}")
    beta = 1 - alpha
    if beta < (x - 1) / x:
        maximizer = beta * x / (x - 1)
        value = alpha ** alpha * beta ** beta * x / (x - 1) ** beta
        branch = "interior"
    else:
        maximizer, value, branch = 1.0, 1.0, "boundary"

    def objective(s: float) -> float:
        return s ** beta * (s + x * (1 - s)) ** alpha

    arg, numeric = maximize_unimodal(objective, 0.0, 1.0, tol, iterations)
    return GrowthResult(value, maximizer, branch, numeric, arg)


def hnnn_objective(x: float, side: str) -> Callable[[float], float]:
    if side == "x0":
        return lambda s: (s + x * (1 - s)) * (x * s + (1 - x) * s * s / 2)
    if side == "0x":
        return lambda t: t * (t * t / 2 + (0.5 - t * t / 2) * x)
    raise InvalidArgumentError(f"side must be one of {SIDES}, got {side!r}")


def growth_hnnn_pieces(x: float, side: str) -> Tuple[float, float]:
    """Both closed-form pieces (interior, boundary) at x, whichever applies."""
    if side == "x0":
        return x ** 3 / (3 * SQRT3 * (x - 1)), (x + 1) / 2
    if side == "0x":
        return x ** 1.5 / (3 * SQRT3 * math.sqrt(x - 1)), 0.5
    raise InvalidArgumentError(f"side must be one of {SIDES}, got {side!r}")


def growth_hnnn(x: float, side: str, tol: float = GSS_TOLERANCE,
                iterations: int = GSS_ITERATIONS) -> GrowthResult:
    """
    Growth constant of T~_{H_{n,n,n}}(x, 0) ("x0") or T~_{H_{n,n,n}}(0, x) ("0x").

    x0: x^3/(3 sqrt3 (x-1)) for x >= sqrt3, else (x+1)/2.
    0x: x^(3/2)/(3 sqrt3 (x-1)^(1/2)) for x >= 3/2, else 1/2.
    """
    if x <= 1:
        raise DomainError(f"x must exceed 1, got {x}")
    interior, boundary = growth_hnnn_pieces(x, side)
    if side == "x0":
        use_interior = x >= SQRT3
        maximizer = (1 - 1 / SQRT3) * x / (x - 1) if use_interior else 1.0
    else:
        use_interior = x >= 1.5
        maximizer = math.sqrt(x / (3 * (x - 1))) if use_interior else 1.0
    value = interior if use_interior else boundary
    arg, numeric = maximize_unimodal(hnnn_objective(x, side), 0.0, 1.0, tol, iterations)
    return GrowthResult(value, maximizer, "interior" if use_interior else "boundary", numeric, arg)


def growth_hnnn_product(x: float) -> float:
    return growth_hnnn(x, "x0").value * growth_hnnn(x, "0x").value


def x0_root(start: float = NEWTON_START) -> float:
    """Largest root of x^3 - 9x + 9 by Newton iteration, started right of sqrt3."""
    if start <= SQRT3:
        raise InvalidArgumentError(f"Newton start must exceed sqrt(3), got {start}")
    x = start
    for _ in range(100):
        step = (x ** 3 - 9 * x + 9) / (3 * x ** 2 - 9)
        x -= step
        if abs(step) < 1e-15:
            break
    return x


@dataclass(frozen=True)
class ProbeReport:
    n: int
    x: float
    exact: bool
    x0_value: float
    zero_x_value: float
    product: float
    exact_product: Optional[Fraction] = None
    x0_estimate: Optional[McEstimate] = None
    zero_x_estimate: Optional[McEstimate] = None

    @property
    def rate(self) -> Optional[float]:
        """(1/n) log(product); None when the product is not positive."""
        if self.product <= 0:
            return None
        return math.log(self.product) / self.n

    @property
    def limit_rate(self) -> Optional[float]:
        """log of the product of both growth constants, the limit of rate as n grows."""
        if self.x <= 1:
            return None
        return math.log(growth_hnnn_product(self.x))


def counterexample_probe(n: int, x, samples: int, seed: int, workers: int = 1,
                         integrate_leaves: bool = True) -> ProbeReport:
    """T~(x,0) T~(0,x) on H_{n,n,n}: exact when 3n <= 11 vertices, otherwise two Monte Carlo estimates."""
    if n < 1:
        raise InvalidArgumentError(f"n must be at least 1, got {n}")
    graph = h_abc(n, n, n)
    if graph.vertex_count <= MAX_EXACT_VERTICES:
        exact_x = Fraction(x)
        polynomial = perm_tutte_exact(graph)
        first = polynomial.evaluate(exact_x, Fraction(0))
        second = polynomial.evaluate(Fraction(0), exact_x)
        product = first * second
        return ProbeReport(n, float(x), True, float(first), float(second), float(product), exact_product=product)
    first = perm_tutte_mc(graph, float(x), 0.0, samples, seed, workers, integrate_leaves)
    second = perm_tutte_mc(graph, 0.0, float(x), samples, seed + 1, workers, integrate_leaves)
    log.info("probe n=%d: %.6g * %.6g", n, first.mean, second.mean)
    return ProbeReport(n, float(x), False, first.mean, second.mean, first.mean * second.mean,
                       x0_estimate=first, zero_x_estimate=second)
