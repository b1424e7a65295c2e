import numpy as np

from oracles.exceptions import SingularSystemException
from oracles.services.spectral_service import SpectralService


class VarianceService:

    def __init__(self, spectral_service=None):
        self.spectral_service = spectral_service or SpectralService()

    def asymptotic_variance(self, model, h):
        """sigma^2(h) = 2 <u, h - mu(h)>_mu where -L u = h - mu(h), mu(u) = 0."""
        h = np.asarray(h, dtype=float)
        centered = h - model.mu @ h
        system = np.vstack([-model.generator, model.mu[None, :]])
        rhs = np.concatenate([centered, [0.0]])
        u, _, rank, _ = np.linalg.lstsq(system, rhs, rcond=None)
        residual = np.max(np.abs(system @ u - rhs), initial=0.0)
        if rank < model.n or residual > 1e-8 * max(1.0, np.max(np.abs(centered))):
            raise SingularSystemException(f"Poisson equation not solvable (rank {rank}, residual {residual:.3g})")
        return float(2.0 * np.sum(model.mu * u * centered))

    def gaussian_lower(self, model, metric):
        """c_G >= sigma^2(h) / ||h||_Lip^2 at the spectral-gap eigenfunction h."""
        h = self.spectral_service.spectral_decomposition(model).eigenfunction
        return self.asymptotic_variance(model, h) / metric.lipschitz_norm(h) ** 2

    def discrete_gaussian_window(self, cp):
        return cp / 8.0, 2.0 * cp
