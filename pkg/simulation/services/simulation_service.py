import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from django.conf import settings

from oracles.models import ProbabilityVector
from oracles.services import InformationService
from simulation.exceptions import InvalidExperimentException
from simulation.models import ConcentrationReport, Trajectory

logger = logging.getLogger(__name__)

SIGMA_SLACK = 3.0


def trial_generator(seed, index):
    """Philox stream for trial `index` of master seed `seed`."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


class SimulationService:

    def __init__(self, information_service=None):
        self.information_service = information_service or InformationService()

    def simulate(self, model, start, T, seed=None, rng=None):
        if not np.isfinite(T) or T < 0:
            raise InvalidExperimentException(f"Horizon must be finite and nonnegative, got {T}")
        if rng is None:
            rng = trial_generator(settings.INEQ_SEED if seed is None else seed, 0)

        total_rate = model.rates.sum(axis=1)
        cumulative = np.cumsum(model.rates / total_rate[:, None], axis=1)
        x = self._initial(model, start, rng)

        initial = x
        times, vertices = [], []
        clock = rng.standard_exponential() / total_rate[x]
        while clock < T:
            x = int(min(np.searchsorted(cumulative[x], rng.random(), side='right'), model.n - 1))
            times.append(clock)
            vertices.append(x)
            clock += rng.standard_exponential() / total_rate[x]
        return Trajectory(initial=initial, jump_times=tuple(times), vertices=tuple(vertices), horizon=float(T))

    def time_averages(self, model, start, t, trials, seed, max_workers=1):
        """Occupation fractions over [0, t], one row per trial; time averages of g are rows @ g."""
        def run(index):
            trajectory = self.simulate(model, start, t, rng=trial_generator(seed, index))
            return trajectory.occupation(model.n) / t

        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            return np.array(list(executor.map(run, range(trials))))

    def concentration_experiment(self, model, nu, g, t, r_list, trials, cG_upper, metric, seed=None, max_workers=None):
        g = np.asarray(g, dtype=float)
        if g.shape != (model.n,):
            raise InvalidExperimentException(f"g has {g.size} entries, model has {model.n} vertices")
        if t <= 0 or trials < 1 or cG_upper <= 0 or any(r <= 0 for r in r_list):
            raise InvalidExperimentException("t, trials, cG_upper and every r must be positive")
        seed = settings.INEQ_SEED if seed is None else seed
        max_workers = max_workers or settings.INEQ_THREADS

        nu = nu if isinstance(nu, ProbabilityVector) else ProbabilityVector.of(nu, n=model.n)
        l2_norm = self.information_service.l2_density_norm(model, nu)
        lipschitz = metric.lipschitz_norm(g)
        if not np.isfinite(lipschitz):
            raise InvalidExperimentException("g is not Lipschitz for the chosen metric")

        logger.info("Running %d trials to t=%g for %d thresholds", trials, t, len(r_list))
        averages = self.time_averages(model, nu, t, trials, seed, max_workers) @ g
        mean = float(model.mu @ g)

        reports = []
        for r in r_list:
            frequency = float(np.mean(averages > mean + r))
            if lipschitz == 0:
                bound = 0.0
            else:
                bound = float(l2_norm * np.exp(-t * r ** 2 / (2.0 * cG_upper * lipschitz ** 2)))
            q = min(1.0, max(frequency, bound))
            standard_error = float(np.sqrt(q * (1.0 - q) / trials))
            reports.append(ConcentrationReport(
                t=float(t),
                r=float(r),
                trials=int(trials),
                frequency=frequency,
                bound=bound,
                l2_norm=l2_norm,
                lipschitz=float(lipschitz),
                cG_upper=float(cG_upper),
                standard_error=standard_error,
                passed=bool(frequency <= bound + SIGMA_SLACK * standard_error),
            ))
            logger.debug("r=%g: frequency %.5g, bound %.5g", r, frequency, bound)
        return reports

    def _initial(self, model, start, rng):
        if isinstance(start, ProbabilityVector):
            return int(min(np.searchsorted(np.cumsum(start.values), rng.random(), side='right'), model.n - 1))
        start = int(start)
        if not 0 <= start < model.n:
            raise InvalidExperimentException(f"Start vertex {start} is out of range")
        return start
