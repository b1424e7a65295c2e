import numpy as np
from scipy.special import xlogy

from oracles.models import InformationResult, ProbabilityVector
from oracles.services.functional_service import FunctionalService


class InformationService:

    def __init__(self, functional_service=None):
        self.functional_service = functional_service or FunctionalService()

    def entropy_info(self, model, nu):
        nu = nu if isinstance(nu, ProbabilityVector) else ProbabilityVector.of(nu, n=model.n)
        H = float(np.sum(xlogy(nu.values, nu.values) - xlogy(nu.values, model.mu)))
        h = np.sqrt(nu.density(model.mu))
        I = self.functional_service.dirichlet(model, h)
        return InformationResult(H=max(H, 0.0), I=I)

    def l2_density_norm(self, model, nu):
        nu = nu if isinstance(nu, ProbabilityVector) else ProbabilityVector.of(nu, n=model.n)
        return float(np.sqrt(np.sum(nu.values ** 2 / model.mu)))
