"""Closed-form delta0 formulas, the gap functions F^k, and the numeric
checks behind both proofs of the lower bound.

delta0 for Gr(k,n) has two closed forms: the sine ratio n*sin(pi k/n)/sin(pi/n)
and an even/odd cosine sum.  F^k(x) = delta0^k(x) - k(x-k) - 1 measures the
gap over the bound dim+1; its nonnegativity at integer points is the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sin

from .combinatorics import GrassmannianParams

TAU_NUM = 1e-9  # slack for grid-sampled inequality checks


def delta0_sine(k: int, x: float) -> float:
    """x * sin(pi k / x) / sin(pi / x), real argument.

    Loses precision once sin(pi/x) underflows; accurate for x up to ~1e12.
    """
    return x * sin(pi * k / x) / sin(pi / x)


def _cosine_terms(k: int, x: float) -> float:
    return sum(cos((k - 2 * j + 1) * pi / x) for j in range(1, k // 2 + 1))


def delta0_cosine_sum(k: int, x: float) -> float:
    """Even k: 2x * sum_j cos((k-2j+1) pi / x); odd k gains a leading x."""
    s = 2.0 * x * _cosine_terms(k, x)
    return s if k % 2 == 0 else x + s


def fk(k: int, x: float) -> float:
    """Gap over the bound: delta0^k(x) - k(x-k) - 1."""
    return delta0_cosine_sum(k, x) - k * (x - k) - 1.0


def fk_second_derivative(k: int, x: float) -> float:
    """d^2/dx^2 of fk.  Each cosine term 2x*cos(a pi/x) contributes
    -2 a^2 pi^2 / x^3 * cos(a pi / x); the linear parts vanish."""
    return -sum(2.0 * (k - 2 * j + 1) ** 2 * pi ** 2 / x ** 3
                * cos((k - 2 * j + 1) * pi / x)
                for j in range(1, k // 2 + 1))


@dataclass
class GalkinReport:
    params: GrassmannianParams
    delta0: float
    bound: float
    margin: float
    equality: bool
    is_projective_space: bool
    verdict: str  # holds_strict | holds_equality | VIOLATION
    consistent: bool  # equality flag agrees with the projective-space test


def verify_galkin(params: GrassmannianParams, tol: float = TAU_NUM) -> GalkinReport:
    """Check delta0 >= dim + 1 with relative equality detection."""
    k, n = params.k, params.n
    delta0 = delta0_sine(k, float(n))
    bound = float(k * (n - k) + 1)
    margin = delta0 - bound
    eq_tol = tol * max(1.0, bound)
    equality = abs(margin) <= eq_tol
    if margin < -eq_tol:
        verdict = "VIOLATION"
    elif equality:
        verdict = "holds_equality"
    else:
        verdict = "holds_strict"
    is_pn = k == 1 or k == n - 1
    return GalkinReport(params, delta0, bound, margin, equality, is_pn,
                        verdict, consistent=(equality == is_pn))


def reduction_domain(params: GrassmannianParams) -> GrassmannianParams:
    """The dual-reduced instance with k <= n/2; same delta0, same bound."""
    if params.k <= params.n - params.k:
        return params
    return params.dual()


def check_second_proof_lemma(n: int, grid_step: float = 0.01) -> bool:
    """Sine-form delta0(x) >= x(n-x)+1 sampled on [3, n/2]."""
    if n < 6:
        raise ValueError("lemma requires n >= 6")
    x = 3.0
    while x <= n / 2 + 1e-12:
        lhs = n * sin(pi * x / n) / sin(pi / n)
        if lhs < x * (n - x) + 1.0 - TAU_NUM:
            return False
        x += grid_step
    return True


def check_k2_inequality(n: int) -> bool:
    """2n cos(pi/n) >= 2n - 3, the k=2 reduction."""
    if n < 4:
        raise ValueError("requires n >= 4")
    return 2 * n * cos(pi / n) >= 2 * n - 3 - TAU_NUM


def check_boundary_equality(k: int) -> float:
    """|F^k(2(k-1)) - F^{k-2}(2(k-1))|, which should vanish for k >= 3."""
    if k < 3:
        raise ValueError("requires k >= 3")
    x = 2.0 * (k - 1)
    return abs(fk(k, x) - fk(k - 2, x))


def check_limit(k: int, X: float = 1e8, tol: float = 1e-4) -> bool:
    """F^k(X) is within tol of the limit value k^2 - 1."""
    return abs(fk(k, X) - (k * k - 1)) < tol


def check_concavity_monotonicity(k: int, x_max: float = 100.0,
                                 grid_step: float = 0.1) -> bool:
    """Sampled concavity and monotonicity of F^k on (2(k-1), x_max].

    At every grid point: second derivative below TAU_NUM and forward
    difference above -TAU_NUM.  The open left endpoint is excluded.
    """
    if k < 2:
        raise ValueError("requires k >= 2")
    x = 2.0 * (k - 1) + grid_step
    while x <= x_max + 1e-12:
        if fk_second_derivative(k, x) >= TAU_NUM:
            return False
        if fk(k, x + grid_step) - fk(k, x) <= -TAU_NUM:
            return False
        x += grid_step
    return True


def fk_table(k: int, x_min: float, x_max: float,
             step: float) -> list[tuple[float, float]]:
    """Grid samples (x, F^k(x)) for CSV emission."""
    if x_min <= 0 or step <= 0:
        raise ValueError("need x_min > 0 and step > 0")
    rows = []
    x = x_min
    while x <= x_max + 1e-12:
        rows.append((x, fk(k, x)))
        x += step
    if not rows:
        raise ValueError("empty grid range")
    return rows
