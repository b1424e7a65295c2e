from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Piecewise-constant path: starts at `initial`, moves to vertices[i] at jump_times[i]."""

    initial: int
    jump_times: tuple
    vertices: tuple
    horizon: float

    @property
    def jump_count(self):
        return len(self.jump_times)

    def holding(self):
        """(vertex, duration) for every holding interval inside [0, horizon]."""
        states = (self.initial,) + self.vertices
        edges = (0.0,) + self.jump_times + (self.horizon,)
        return [(x, edges[i + 1] - edges[i]) for i, x in enumerate(states)]

    def occupation(self, n):
        times = np.zeros(n)
        for x, duration in self.holding():
            times[x] += duration
        return times

    def time_integral(self, g):
        """Exact integral of g(X_s) over [0, horizon]."""
        g = np.asarray(g, dtype=float)
        return float(sum(g[x] * duration for x, duration in self.holding()))


@dataclass(frozen=True)
class ConcentrationReport:
    t: float
    r: float
    trials: int
    frequency: float
    bound: float
    l2_norm: float
    lipschitz: float
    cG_upper: float
    standard_error: float
    passed: bool
