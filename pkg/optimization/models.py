from dataclasses import dataclass, field
from enum import Enum

from django.conf import settings

from graphs.models import LengthFunction


class ObjectiveKind(str, Enum):
    LS_BOUND = 'ls_bound'
    K_CONSTANT = 'K_constant'
    POINCARE = 'poincare_bound_eq11'
    WEIGHTED_POINCARE = 'weighted_poincare'


@dataclass(frozen=True)
class OptimizationConfig:
    restarts: int = 8
    max_iters: int = 500
    tol: float = 1e-9
    seed: int = 0
    max_workers: int = 1

    @classmethod
    def from_settings(cls, **overrides):
        values = dict(
            restarts=settings.INEQ_OPT_RESTARTS,
            max_iters=settings.INEQ_OPT_MAX_ITERS,
            tol=settings.INEQ_OPT_TOL,
            seed=settings.INEQ_SEED,
            max_workers=settings.INEQ_THREADS,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True, eq=False)
class Objective:
    """Per-oriented-edge profile of a path-method bound as a function of w; the bound is its max."""

    kind: ObjectiveKind
    profile: object
    inputs: dict = field(default_factory=dict)

    def __call__(self, w):
        return float(self.profile(w).max())


@dataclass(frozen=True, eq=False)
class OptimizationResult:
    """Upper estimate of inf_w; w_best is normalized so its values sum to |E0|."""

    w_best: LengthFunction
    value_best: float
    value_at_uniform: float
    iterations: int
    restarts: int
    converged: bool
    trace: tuple = ()
    best_restart: int = 0
