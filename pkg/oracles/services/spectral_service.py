import logging

import numpy as np

from oracles.exceptions import DegenerateSpectrumException
from oracles.models import SpectralResult

logger = logging.getLogger(__name__)

ZERO_EIGENVALUE = 1e-10


class SpectralService:

    def spectral_decomposition(self, model):
        """Spectrum of -L on L2(mu) through S = M^(1/2) (-L) M^(-1/2), M = diag(mu)."""
        root = np.sqrt(model.mu)
        symmetric = -model.generator * root[:, None] / root[None, :]
        symmetric = 0.5 * (symmetric + symmetric.T)
        eigenvalues, eigenvectors = np.linalg.eigh(symmetric)

        if abs(eigenvalues[0]) > ZERO_EIGENVALUE:
            raise DegenerateSpectrumException(f"Lowest eigenvalue {eigenvalues[0]} is not zero")
        if eigenvalues[1] <= ZERO_EIGENVALUE:
            raise DegenerateSpectrumException("Eigenvalue 0 is not simple; the chain is not irreducible")

        gap = float(eigenvalues[1])
        eigenfunction = eigenvectors[:, 1] / root
        eigenfunction = eigenfunction / np.sqrt(model.mu @ eigenfunction ** 2)
        logger.debug("Spectral gap %.6g on %d vertices", gap, model.n)
        return SpectralResult(cp=1.0 / gap, gap=gap, eigenvalues=eigenvalues, eigenfunction=eigenfunction)

    def spectral_cp(self, model):
        return self.spectral_decomposition(model).cp
