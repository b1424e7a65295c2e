import logging
import math

import numpy as np
from scipy.special import logsumexp

from bounds.exceptions import NotLaplacianException, TooLargeException
from bounds.models import BoundReport, FormulaTag, IsoperimetryCheck, MgfCheck
from graphs.services import MetricService, ModelService

logger = logging.getLogger(__name__)

MAX_SUBSET_VERTICES = 20


class CorollaryService:

    def __init__(self, metric_service=None, model_service=None):
        self.metric_service = metric_service or MetricService()
        self.model_service = model_service or ModelService()

    def laplacian_corollary_bounds(self, model):
        if not model.is_laplacian():
            raise NotLaplacianException("Laplacian corollaries need q(x, y) = 1/d_x")
        stats = self.model_service.degree_stats(model)
        table = self.metric_service.geodesic_table(model)
        b = self.metric_service.b_constant(model, table)
        D = self.metric_service.diameter(model, table)
        common = stats.d_star ** 2 * b / stats.edge_count

        report = BoundReport()
        inputs = dict(metric='graph', w='uniform', paths='uniform-geodesic', d_star=stats.d_star, b=b, D=D)
        report.add('K_laplacian', common * D ** 3, FormulaTag.LAPLACIAN_TRANSPORT, **inputs)
        report.add('kappa_laplacian', common * D, FormulaTag.LAPLACIAN_CHEEGER, **inputs)
        return report

    def concentration_constants(self, model, rho, K, kappa=None):
        M = float(0.5 * np.max((rho.rho ** 2 * model.rates).sum(axis=1)))
        report = BoundReport()
        report.add('M', M, FormulaTag.JUMP_MOMENT, metric=rho.kind.value)
        report.add('transport_entropy', math.sqrt(2.0 * K * M), FormulaTag.TRANSPORT_ENTROPY, metric=rho.kind.value)
        if kappa is not None:
            B = self.model_service.degree_stats(model).B
            cheeger_gaussian = kappa ** 2 * B
            report.add('cheeger_gaussian', cheeger_gaussian, FormulaTag.CHEEGER_GAUSSIAN, metric=rho.kind.value, B=B)
            report.add('gaussian_best', min(K, cheeger_gaussian), FormulaTag.GAUSSIAN_BEST, metric=rho.kind.value)
        return report

    def mgf_check(self, model, rho, g, lambdas, te_constant):
        g = np.asarray(g, dtype=float)
        centered = g - model.mu @ g
        lipschitz = rho.lipschitz_norm(g)
        worst = 0.0
        passed = True
        for lam in np.atleast_1d(np.asarray(lambdas, dtype=float)):
            log_lhs = float(logsumexp(lam * centered, b=model.mu))
            if lam == 0 or lipschitz == 0:
                log_rhs = 0.0
            else:
                log_rhs = lam ** 2 * te_constant * lipschitz ** 2 / 4.0
            passed = passed and log_lhs <= log_rhs + 1e-12
            worst = max(worst, math.exp(log_lhs - log_rhs) if math.isfinite(log_rhs) else 0.0)
        return MgfCheck(passed=bool(passed), worst_ratio=worst, lipschitz=lipschitz)

    def cheeger_check(self, model, kappa):
        n = model.n
        if n > MAX_SUBSET_VERTICES:
            raise TooLargeException(f"Subset enumeration is limited to {MAX_SUBSET_VERTICES} vertices")
        logger.debug("Enumerating %d subsets", 2 ** n - 2)

        codes = np.arange(1, 2 ** n - 1)
        members = ((codes[:, None] >> np.arange(n)) & 1).astype(bool)
        mass = members @ model.mu
        u, v = model.edges[:, 0], model.edges[:, 1]
        boundary = (members[:, u] & ~members[:, v]).astype(float) @ model.conductance

        capacity = kappa * boundary
        symmetric = 2.0 * mass * (1.0 - mass) / capacity
        cheeger = np.where(mass <= 0.5, mass / capacity, 0.0)
        worst = int(np.argmax(np.maximum(symmetric, cheeger)))
        return IsoperimetryCheck(
            symmetric_ratio=float(symmetric.max()),
            cheeger_ratio=float(cheeger.max()),
            worst_subset=tuple(int(i) for i in np.flatnonzero(members[worst])),
        )
