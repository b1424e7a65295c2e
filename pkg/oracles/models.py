from dataclasses import dataclass

import numpy as np

from oracles.exceptions import InvalidMeasureException


@dataclass(frozen=True, eq=False)
class ProbabilityVector:
    values: np.ndarray

    @classmethod
    def of(cls, values, n=None, tol=1e-9):
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or (n is not None and len(values) != n):
            raise InvalidMeasureException(f"Expected a vector of length {n}, got shape {values.shape}")
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise InvalidMeasureException("Probability vector must be finite and nonnegative")
        total = values.sum()
        if abs(total - 1.0) > tol:
            raise InvalidMeasureException(f"Probability vector sums to {total}, not 1")
        values = values / total
        values.setflags(write=False)
        return cls(values)

    def density(self, mu):
        """d nu / d mu; mu is strictly positive on a connected model."""
        return self.values / mu


@dataclass(frozen=True, eq=False)
class TransportPlan:
    matrix: np.ndarray
    source: np.ndarray
    target: np.ndarray
    cost: float


@dataclass(frozen=True, eq=False)
class TransportResult:
    """W1 value, optimal plan and a 1-Lipschitz witness g with source(g) - target(g) = value."""

    value: float
    plan: TransportPlan
    witness: np.ndarray
    gap: float


@dataclass(frozen=True, eq=False)
class SpectralResult:
    cp: float
    gap: float
    eigenvalues: np.ndarray
    eigenfunction: np.ndarray


@dataclass(frozen=True)
class InformationResult:
    H: float
    I: float


@dataclass(frozen=True, eq=False)
class CheegerEstimate:
    value: float
    subset: tuple
    density: np.ndarray


@dataclass(frozen=True, eq=False)
class LsEstimate:
    """Best Ent(f^2) / (2 E(f, f)) found; the witness is normalized to mu(f^2) = 1."""

    value: float
    witness: np.ndarray
    eigenfunction_ratio: float
    restarts: int
