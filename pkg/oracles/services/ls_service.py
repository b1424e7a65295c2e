import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from django.conf import settings
from scipy.optimize import minimize
from scipy.special import xlogy

from oracles.exceptions import InvalidParameterException
from oracles.models import LsEstimate
from oracles.services.functional_service import FunctionalService
from oracles.services.spectral_service import SpectralService

logger = logging.getLogger(__name__)

PERTURBATION = 0.01


class LsService:

    def __init__(self, spectral_service=None, functional_service=None):
        self.spectral_service = spectral_service or SpectralService()
        self.functional_service = functional_service or FunctionalService()

    def ls_ratio(self, model, f):
        energy = self.functional_service.dirichlet(model, f)
        if energy <= 0:
            return 0.0
        return self.functional_service.entropy_of_square(model, f) / (2.0 * energy)

    def ls_ratio_gradient(self, model, f):
        """Gradient of Ent(f^2) / (2 E(f, f)) in the coordinates f(x)."""
        f = np.asarray(f, dtype=float)
        square = f ** 2
        mass = model.mu @ square
        energy = self.functional_service.dirichlet(model, f)
        if energy <= 0 or mass <= 0:
            return np.zeros_like(f)
        entropy = model.mu @ xlogy(square, square) - xlogy(mass, mass)
        d_entropy = 2.0 * model.mu * (xlogy(f, square) - f * np.log(mass))
        d_energy = -2.0 * model.mu * (model.generator @ f)
        return d_entropy / (2.0 * energy) - entropy * d_energy / (2.0 * energy ** 2)

    def ls_lower(self, model, restarts=None, iterations=None, seed=None, max_workers=None):
        restarts = settings.INEQ_OPT_RESTARTS if restarts is None else restarts
        iterations = settings.INEQ_OPT_MAX_ITERS if iterations is None else iterations
        if restarts < 0 or iterations < 1:
            raise InvalidParameterException("restarts >= 0 and iterations >= 1 are required")
        seed = settings.INEQ_SEED if seed is None else seed
        max_workers = max_workers or settings.INEQ_THREADS

        eigenfunction = self.spectral_service.spectral_decomposition(model).eigenfunction
        starts = [
            eigenfunction,
            1.0 + PERTURBATION * eigenfunction / np.max(np.abs(eigenfunction)),
        ]
        starts.extend(np.eye(model.n))
        for index in range(restarts):
            rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))
            starts.append(rng.uniform(0.0, 1.0, size=model.n))

        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(lambda start: self._ascend(model, start, iterations), starts))

        # max value, ties to the earliest start
        best_index = max(range(len(results)), key=lambda i: (results[i][0], -i))
        value, witness = results[best_index]
        eigenfunction_ratio = self.ls_ratio(model, eigenfunction)
        logger.info("ls_lower %.6g from %d starts (eigenfunction ratio %.6g)", value, len(starts), eigenfunction_ratio)
        return LsEstimate(
            value=value,
            witness=witness / np.sqrt(model.mu @ witness ** 2),
            eigenfunction_ratio=eigenfunction_ratio,
            restarts=len(starts),
        )

    def _ascend(self, model, start, iterations):
        start = np.asarray(start, dtype=float)
        initial = self.ls_ratio(model, start)
        result = minimize(
            lambda f: -self.ls_ratio(model, f),
            start,
            jac=lambda f: -self.ls_ratio_gradient(model, f),
            method='L-BFGS-B',
            options={'maxiter': iterations},
        )
        value = self.ls_ratio(model, result.x)
        if not np.isfinite(value) or value < initial or np.all(result.x == 0):
            return initial, start
        return value, result.x
