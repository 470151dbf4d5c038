"""Reward environments with independent per-item draws and exact gap structure."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .combinat import Action, ActionSetSpec, enumerate_actions
from .errors import InvalidSpec, NonUniqueOptimum

BERNOULLI = "bernoulli"
GAUSSIAN = "gaussian"
BOUNDED_UNIFORM = "bounded-uniform"


@dataclass(frozen=True)
class EnvModel:
    """Reward model: mean vector, distribution family, subgaussian parameter.

    The instance is immutable; arrays are marked read-only at construction.
    ``sigma`` defaults: 1/2 for Bernoulli, sqrt(max variance) for Gaussian,
    (b-a)/2 for bounded-uniform.
    """

    mu_star: np.ndarray
    family: str = BERNOULLI
    sigma: float | None = None
    variance: np.ndarray | None = None  # gaussian only, per item
    bounds: tuple[float, float] | None = None  # bounded-uniform only

    def __post_init__(self):
        mu = np.array(self.mu_star, dtype=float)
        mu.setflags(write=False)
        object.__setattr__(self, "mu_star", mu)
        if mu.ndim != 1 or mu.size == 0:
            raise InvalidSpec("mu_star must be a nonempty vector")

        if self.family == BERNOULLI:
            if np.any(mu < 0) or np.any(mu > 1):
                raise InvalidSpec("Bernoulli means must lie in [0, 1]")
            sigma = 0.5 if self.sigma is None else float(self.sigma)
        elif self.family == GAUSSIAN:
            if self.variance is None:
                raise InvalidSpec("gaussian family requires per-item variance")
            var = np.broadcast_to(np.asarray(self.variance, dtype=float), mu.shape).copy()
            if np.any(var < 0):
                raise InvalidSpec("variances must be nonnegative")
            var.setflags(write=False)
            object.__setattr__(self, "variance", var)
            sigma = math.sqrt(var.max()) if self.sigma is None else float(self.sigma)
            if var.max() > sigma**2 * (1 + 1e-12):
                raise InvalidSpec("gaussian per-item variance must not exceed sigma^2")
        elif self.family == BOUNDED_UNIFORM:
            if self.bounds is None:
                raise InvalidSpec("bounded-uniform family requires bounds (a, b)")
            a, b = float(self.bounds[0]), float(self.bounds[1])
            if not a < b:
                raise InvalidSpec("bounded-uniform requires a < b")
            if np.any(mu < a) or np.any(mu > b):
                raise InvalidSpec("means must lie inside [a, b]")
            object.__setattr__(self, "bounds", (a, b))
            sigma = (b - a) / 2 if self.sigma is None else float(self.sigma)
        else:
            raise InvalidSpec(f"unknown reward family {self.family!r}")
        if sigma < 0:
            raise InvalidSpec("sigma must be nonnegative")
        object.__setattr__(self, "sigma", sigma)

    @property
    def d(self) -> int:
        return self.mu_star.size


def sample_rewards(model: EnvModel, rng: np.random.Generator) -> np.ndarray:
    """One full reward vector X(t); masking to the played action happens downstream."""
    mu = model.mu_star
    if model.family == BERNOULLI:
        return (rng.random(mu.size) < mu).astype(float)
    if model.family == GAUSSIAN:
        return mu + np.sqrt(model.variance) * rng.standard_normal(mu.size)
    # bounded-uniform: per-item uniform centered at mu_i, widest support within [a, b]
    a, b = model.bounds
    half = np.minimum(mu - a, b - mu)
    return mu + half * (2.0 * rng.random(mu.size) - 1.0)


def sample_rewards_batch(model: EnvModel, rng: np.random.Generator, reps: int) -> np.ndarray:
    """(reps, d) array of independent reward vectors."""
    mu = model.mu_star
    if model.family == BERNOULLI:
        return (rng.random((reps, mu.size)) < mu).astype(float)
    if model.family == GAUSSIAN:
        return mu + np.sqrt(model.variance) * rng.standard_normal((reps, mu.size))
    a, b = model.bounds
    half = np.minimum(mu - a, b - mu)
    return mu + half * (2.0 * rng.random((reps, mu.size)) - 1.0)


@dataclass(frozen=True)
class GapStructure:
    """Optimal action and reward gaps of every action, computed by enumeration.

    For a single-action set there is no suboptimal action and ``delta_min``
    is +inf while ``delta_max`` is 0.
    """

    optimal_action: Action
    optimal_value: float
    delta_by_action: MappingProxyType = field(repr=False)
    delta_min: float = math.inf
    delta_max: float = 0.0


def gaps(model: EnvModel, spec: ActionSetSpec) -> GapStructure:
    """Exact gap structure; raises NonUniqueOptimum when the maximum is attained twice."""
    if model.d != spec.d:
        raise InvalidSpec("environment and action set dimensions disagree")
    actions = enumerate_actions(spec)
    matrix = np.array([a.bits for a in actions], dtype=float)
    values = matrix @ model.mu_star
    best = values.max()
    winners = np.flatnonzero(values == best)
    if len(winners) > 1:
        raise NonUniqueOptimum(
            f"{len(winners)} actions attain the optimal value {best}; gaps are undefined"
        )
    opt = actions[winners[0]]
    deltas = best - values
    positive = deltas[deltas > 0]
    return GapStructure(
        optimal_action=opt,
        optimal_value=float(best),
        delta_by_action=MappingProxyType({a: float(g) for a, g in zip(actions, deltas)}),
        delta_min=float(positive.min()) if positive.size else math.inf,
        delta_max=float(deltas.max()),
    )
