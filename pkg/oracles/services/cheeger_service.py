import logging
from itertools import combinations

import numpy as np

from oracles.exceptions import TooLargeException
from oracles.models import CheegerEstimate
from oracles.services.functional_service import FunctionalService
from oracles.services.transport_service import TransportService

logger = logging.getLogger(__name__)

MAX_VERTICES = 20


class CheegerService:

    def __init__(self, transport_service=None, functional_service=None):
        self.transport_service = transport_service or TransportService()
        self.functional_service = functional_service or FunctionalService()

    def cheeger_lower(self, model, metric):
        """max over proper subsets A of 2 W1(f_A mu, mu) / sum_e |D_e f_A| Q(e), f_A = 1_A / mu(A).

        Singletons are the densities 1_x / mu(x), the extremal family on stars.
        """
        n = model.n
        if n > MAX_VERTICES:
            raise TooLargeException(f"Subset enumeration is limited to {MAX_VERTICES} vertices")
        logger.info("Enumerating %d subsets for the Cheeger lower bound", 2 ** n - 2)

        best = CheegerEstimate(value=0.0, subset=(), density=np.zeros(n))
        for size in range(1, n):
            for subset in combinations(range(n), size):
                indicator = np.zeros(n)
                indicator[list(subset)] = 1.0
                density = indicator / (model.mu @ indicator)
                ratio = self.ratio(model, metric, density)
                if ratio > best.value:
                    best = CheegerEstimate(value=ratio, subset=subset, density=density)
        return best

    def ratio(self, model, metric, density):
        transport = self.transport_service.wasserstein1(metric, density * model.mu, model.mu)
        return 2.0 * transport.value / self.functional_service.gradient_mass(model, density)
