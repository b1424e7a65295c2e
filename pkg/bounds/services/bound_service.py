import logging
import math

import numpy as np
from scipy.special import xlogy

from bounds.exceptions import InconsistentBoundException, NegativePhiException
from graphs.models import LengthFunction
from graphs.services import PathService

logger = logging.getLogger(__name__)

LOG_E2_PLUS_1 = math.log(math.e ** 2 + 1)


class BoundService:

    def __init__(self, path_service=None):
        self.path_service = path_service or PathService()

    def L_we(self, paths, w=None, traversal=None):
        """L[e, x] = E sum_y 1{e in gamma_xy} |gamma_xy|_w mu(y)."""
        if traversal is None:
            traversal = self.path_service.traversal(paths, w)
        return traversal @ paths.model.mu

    def ls_profile(self, paths, w=None, traversal=None):
        model = paths.model
        w = w or LengthFunction.uniform(model)
        L = self.L_we(paths, w, traversal)
        mass = L @ model.mu
        entropy = xlogy(L, L) @ model.mu - xlogy(mass, mass)
        return (entropy + mass * LOG_E2_PLUS_1) / (model.conductance * w.oriented(model))

    def ls_bound(self, paths, w=None):
        return float(self.ls_profile(paths, w).max())

    def weighted_poincare_profile(self, paths, w, phi, traversal=None):
        model = paths.model
        w = w or LengthFunction.uniform(model)
        phi = np.asarray(phi, dtype=float)
        if np.any(phi < 0):
            raise NegativePhiException("phi must be nonnegative")
        L = self.L_we(paths, w, traversal)
        return 2.0 * (L @ (phi * model.mu)) / (model.conductance * w.oriented(model))

    def weighted_poincare(self, paths, w, phi):
        return float(self.weighted_poincare_profile(paths, w, phi).max())

    def poincare_profile(self, paths, w=None, traversal=None):
        model = paths.model
        w = w or LengthFunction.inverse_conductance(model)
        h = self.path_service.edge_expectation(paths, w, 1.0, traversal=traversal)
        return self._symmetric(paths, h / (model.conductance * w.oriented(model)), 'poincare')

    def poincare_bound(self, paths, w=None):
        return float(self.poincare_profile(paths, w).max())

    def K_profile(self, paths, w, rho, traversal=None):
        model = paths.model
        w = w or LengthFunction.uniform(model)
        h = self.path_service.edge_expectation(paths, w, rho.rho ** 2, traversal=traversal)
        return self._symmetric(paths, h / (model.conductance * w.oriented(model)), 'K')

    def K_constant(self, paths, w, rho):
        return float(self.K_profile(paths, w, rho).max())

    def kappa_profile(self, paths, rho):
        model = paths.model
        h = self.path_service.incidence_expectation(paths, rho.rho)
        return self._symmetric(paths, h / model.conductance, 'kappa')

    def kappa_constant(self, paths, rho):
        return float(self.kappa_profile(paths, rho).max())

    def _symmetric(self, paths, profile, name):
        if paths.symmetric:
            reverse = profile[paths.model.reverse]
            if not np.allclose(profile, reverse, rtol=1e-9, atol=1e-12):
                raise InconsistentBoundException(f"{name} profile differs between an edge and its reverse")
        return profile
