"""Multistart projected-gradient minimization of forms on the unit sphere.

This is a floating-point reference, never a certificate. Points are weighted:
the value x_i stands for ``weights[i]`` equal coordinates, so a k-point
pattern is minimized in k variables on the sphere sum w_i x_i^2 = 1 by the
same code that handles the full sphere (all weights 1).
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

logger = logging.getLogger(__name__)

INITIAL_STEP = 0.1
GRADIENT_TOLERANCE = 1e-10
ARMIJO = 1e-4
MAX_HALVINGS = 60


@dataclass(frozen=True)
class MinimizationResult:
    minimum: float
    argmin: tuple
    restarts: int
    converged: bool
    gradient_norm: float
    restart_index: int
    iterations: int


class PowerSumEvaluator:
    """Batched float evaluation of a form through its power sums."""

    def __init__(self, form, weights=None):
        self.terms = [(float(coefficient), term.factors) for term, coefficient in form.terms]
        self.indices = sorted({j for _, factors in self.terms for j, _ in factors})
        self.weights = np.ones(form.n) if weights is None else np.asarray(weights, dtype=float)

    def power_sums(self, x):
        return {r: (self.weights * x ** r).sum(axis=1) for r in self.indices}

    def value(self, x):
        sums = self.power_sums(x)
        value = np.zeros(len(x))
        for coefficient, factors in self.terms:
            product = np.full(len(x), coefficient)
            for j, k in factors:
                product = product * sums[j] ** k
            value += product
        return value

    def value_and_gradient(self, x):
        """Value and gradient in x, by the chain rule dM_r/dx_i = r w_i x_i^(r-1)."""
        sums = self.power_sums(x)
        value = np.zeros(len(x))
        partial = {r: np.zeros(len(x)) for r in self.indices}
        for coefficient, factors in self.terms:
            powers = [sums[j] ** k for j, k in factors]
            value += coefficient * np.prod(powers, axis=0)
            for position, (j, k) in enumerate(factors):
                others = np.ones(len(x))
                for other, power in enumerate(powers):
                    if other != position:
                        others = others * power
                partial[j] += coefficient * k * sums[j] ** (k - 1) * others
        gradient = np.zeros_like(x)
        for r in self.indices:
            gradient += partial[r][:, None] * r * self.weights * x ** (r - 1)
        return value, gradient


def sphere_starts(rng, restarts, size):
    """Sorted nonnegative starting points on the unit sphere."""
    starts = -np.sort(-np.abs(rng.standard_normal((restarts, size))), axis=1)
    return starts / np.linalg.norm(starts, axis=1)[:, None]


def projected_descent(evaluator, starts, max_iterations):
    """Armijo-backtracking projected gradient, one line search per row.

    Rows are points b on the unit sphere; the form is evaluated at
    x = b / sqrt(weights).
    """
    scale = 1 / np.sqrt(evaluator.weights)

    def value_and_gradient(b):
        value, gradient = evaluator.value_and_gradient(b * scale)
        return value, gradient * scale

    b = starts.copy()
    step = np.full(len(b), INITIAL_STEP)
    stalled = np.zeros(len(b), dtype=bool)
    value, gradient = value_and_gradient(b)
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        projected = gradient - (gradient * b).sum(axis=1)[:, None] * b
        norms = np.linalg.norm(projected, axis=1)
        active = (norms >= GRADIENT_TOLERANCE) & ~stalled
        if not active.any():
            break
        accepted = np.zeros(len(b), dtype=bool)
        for _ in range(MAX_HALVINGS):
            rows = np.flatnonzero(active & ~accepted)
            if not len(rows):
                break
            candidate = b[rows] - step[rows, None] * projected[rows]
            candidate /= np.linalg.norm(candidate, axis=1)[:, None]
            candidate_value = evaluator.value(candidate * scale)
            decrease = candidate_value <= value[rows] - ARMIJO * step[rows] * norms[rows] ** 2
            b[rows[decrease]] = candidate[decrease]
            accepted[rows[decrease]] = True
            step[rows[~decrease]] /= 2
        stalled |= active & ~accepted
        step[accepted] *= 2
        value, gradient = value_and_gradient(b)
    projected = gradient - (gradient * b).sum(axis=1)[:, None] * b
    return b, value, np.linalg.norm(projected, axis=1), iterations


def _minimize(form, weights, restarts, seed, max_iterations):
    restarts = settings.SYMTEST_RESTARTS if restarts is None else restarts
    max_iterations = settings.SYMTEST_MAX_ITERATIONS if max_iterations is None else max_iterations
    evaluator = PowerSumEvaluator(form, weights)
    rng = np.random.default_rng(seed)
    starts = sphere_starts(rng, restarts, len(evaluator.weights))
    b, values, norms, iterations = projected_descent(evaluator, starts, max_iterations)
    best = int(np.argmin(values))
    converged = bool(norms[best] < GRADIENT_TOLERANCE)
    if not converged:
        logger.warning('best of %d restarts stopped with projected gradient %.3g',
                       restarts, norms[best])
    argmin = b[best] / np.sqrt(evaluator.weights)
    return MinimizationResult(
        minimum=float(values[best]), argmin=tuple(float(x) for x in argmin),
        restarts=restarts, converged=converged, gradient_norm=float(norms[best]),
        restart_index=best, iterations=iterations)


def minimize_on_sphere(form, restarts=None, seed=0, max_iterations=None):
    """Approximate minimum of ``form`` on the unit sphere of R^n."""
    return _minimize(form, np.ones(form.n), restarts, seed, max_iterations)


def minimize_restriction(form, pattern, restarts=None, seed=0, max_iterations=None):
    """Approximate minimum of ``form`` on the pattern's points of the unit sphere.

    ``argmin`` holds the pattern's values, one per multiplicity.
    """
    pattern.check(form.n)
    return _minimize(form, np.asarray(pattern.multiplicities, dtype=float),
                     restarts, seed, max_iterations)


def evaluate_float(form, point):
    return float(PowerSumEvaluator(form).value(np.asarray([point], dtype=float))[0])
