import logging

import numpy as np
import ot
from django.conf import settings

from oracles.exceptions import InvalidMeasureException, NonConvergenceException
from oracles.models import ProbabilityVector, TransportPlan, TransportResult

logger = logging.getLogger(__name__)


class TransportService:

    def __init__(self, max_pivots=None):
        self.max_pivots = max_pivots or settings.INEQ_TRANSPORT_MAX_PIVOTS

    def wasserstein1(self, metric, nu1, nu2):
        source = self._measure(nu1, metric.n)
        target = self._measure(nu2, metric.n)
        cost = np.ascontiguousarray(metric.rho, dtype=np.float64)

        plan, log = ot.emd(source, target, cost, numItermax=self.max_pivots, log=True)
        if log.get('result_code', 1) != 1:
            raise NonConvergenceException(f"Transport solver stopped: {log.get('warning')}")

        value = float(np.sum(plan * cost))
        # c-transform of the column potentials: 1-Lipschitz, >= u on rows, <= -v on columns.
        witness = np.min(cost - np.asarray(log['v'])[None, :], axis=1)
        dual = float((source - target) @ witness)
        gap = abs(value - dual)
        logger.debug("W1 = %.12g, duality gap %.3g", value, gap)

        return TransportResult(
            value=value,
            plan=TransportPlan(matrix=plan, source=source, target=target, cost=value),
            witness=witness,
            gap=gap,
        )

    def _measure(self, nu, n):
        if isinstance(nu, ProbabilityVector):
            values = nu.values
        else:
            values = ProbabilityVector.of(nu, n=n).values
        if len(values) != n:
            raise InvalidMeasureException(f"Measure has {len(values)} entries, metric has {n} points")
        return np.ascontiguousarray(values, dtype=np.float64)
