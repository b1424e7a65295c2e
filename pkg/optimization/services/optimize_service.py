import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.optimize import minimize, minimize_scalar
from scipy.special import logsumexp

from graphs.models import LengthFunction
from optimization.exceptions import BadObjectiveException
from optimization.models import Objective, OptimizationConfig, OptimizationResult

logger = logging.getLogger(__name__)

SEARCH_HALF_WIDTH = 6.0
LINE_XATOL = 1e-7
SMOOTHING_TEMPERATURES = (10.0, 100.0, 1000.0)


class OptimizeService:

    def optimize_w(self, model, paths, objective, config=None):
        if not isinstance(objective, Objective):
            raise BadObjectiveException(f"Not an objective: {objective!r}")
        config = config or OptimizationConfig.from_settings()
        if config.restarts < 0 or config.max_iters < 1 or config.tol < 0:
            raise BadObjectiveException("restarts >= 0, max_iters >= 1 and tol >= 0 are required")

        uniform = LengthFunction.uniform(model)
        value_at_uniform = objective(uniform)

        starts = [np.zeros(len(uniform.values)), np.log(LengthFunction.inverse_conductance(model).values)]
        for index in range(config.restarts):
            rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(config.seed, spawn_key=(index,))))
            starts.append(rng.uniform(np.log(0.25), np.log(4.0), size=len(uniform.values)))

        logger.info("Optimizing %s over %d edge weights from %d starts",
                    objective.kind.value, len(uniform.values), len(starts))
        with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
            runs = list(executor.map(lambda start: self._descend(objective, start, config), starts))

        best_restart = min(range(len(runs)), key=lambda i: (runs[i]['value'], i))
        best = runs[best_restart]
        w_best = LengthFunction(np.exp(best['log_w'])).normalized()
        value_best = objective(w_best)
        if value_best > value_at_uniform:
            w_best, value_best = uniform, value_at_uniform

        logger.info("%s: %.10g at uniform w, %.10g after optimization (restart %d)",
                    objective.kind.value, value_at_uniform, value_best, best_restart)
        return OptimizationResult(
            w_best=w_best,
            value_best=value_best,
            value_at_uniform=value_at_uniform,
            iterations=best['sweeps'],
            restarts=len(starts),
            converged=best['converged'],
            trace=tuple(best['trace']),
            best_restart=best_restart,
        )

    def _descend(self, objective, log_w, config):
        def evaluate(x):
            return objective(LengthFunction(np.exp(x)))

        current = self._normalize(np.array(log_w, dtype=float))
        value = evaluate(current)
        trace = [value]

        current, value = self._smoothed_start(evaluate, objective, current, value, config)
        if value < trace[-1]:
            trace.append(value)

        converged = False
        sweeps = 0
        for sweeps in range(1, config.max_iters + 1):
            sweep_start = value
            for k in range(len(current)):
                def line(t, k=k):
                    x = current.copy()
                    x[k] = t
                    return evaluate(x)

                result = minimize_scalar(
                    line,
                    bounds=(current[k] - SEARCH_HALF_WIDTH, current[k] + SEARCH_HALF_WIDTH),
                    method='bounded',
                    options={'xatol': LINE_XATOL},
                )
                if result.fun < value:
                    current[k] = result.x
                    value = float(result.fun)

            current = self._normalize(current)
            value = min(value, evaluate(current))
            trace.append(value)
            logger.debug("sweep %d: %.12g", sweeps, value)
            if sweep_start - value < config.tol:
                converged = True
                break

        return {'value': value, 'log_w': current, 'sweeps': sweeps, 'converged': converged, 'trace': trace}

    def _smoothed_start(self, evaluate, objective, current, value, config):
        """Minimizes a log-sum-exp smoothing of the max, kept only if the true max drops."""
        best, best_value = current, value
        x = current
        for beta in SMOOTHING_TEMPERATURES:
            scale = max(best_value, 1e-300)

            def smoothed(y, beta=beta, scale=scale):
                profile = objective.profile(LengthFunction(np.exp(y))) / scale
                return float(logsumexp(beta * profile) / beta)

            result = minimize(
                smoothed,
                x,
                method='L-BFGS-B',
                bounds=[(c - 2 * SEARCH_HALF_WIDTH, c + 2 * SEARCH_HALF_WIDTH) for c in current],
                options={'maxiter': config.max_iters},
            )
            x = self._normalize(result.x)
            candidate = evaluate(x)
            if np.isfinite(candidate) and candidate < best_value:
                best, best_value = x, candidate
        return best.copy(), best_value

    def _normalize(self, log_w):
        return log_w - logsumexp(log_w) + np.log(len(log_w))
