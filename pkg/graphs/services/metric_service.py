import logging

import networkx as nx
import numpy as np
from django.conf import settings
from scipy.sparse.csgraph import shortest_path

from graphs.exceptions import InvalidGraphException, TooManyPathsException
from graphs.models import GeodesicTable, LengthFunction, Metric, MetricKind, _frozen

logger = logging.getLogger(__name__)


class MetricService:

    def all_pairs_distance(self, model, w=None):
        w = w or LengthFunction.uniform(model)
        weights = np.zeros((model.n, model.n))
        weights[model.edges[:, 0], model.edges[:, 1]] = w.oriented(model)
        rho = shortest_path(weights, method='D', directed=True)
        uniform = np.allclose(w.values, w.values[0])
        kind = MetricKind.GRAPH if uniform and w.values[0] == 1.0 else MetricKind.W_INDUCED
        return Metric(rho=_frozen(rho), kind=kind)

    def graph_metric(self, model):
        return self.all_pairs_distance(model)

    def discrete_metric(self, model):
        return Metric(rho=_frozen(1.0 - np.eye(model.n)), kind=MetricKind.DISCRETE)

    def weighted_discrete_metric(self, model, phi):
        """rho(x, y) = 1{x != y} (phi(x) + phi(y))."""
        phi = np.asarray(phi, dtype=float)
        if phi.shape != (model.n,):
            raise InvalidGraphException(f"phi needs {model.n} values, got {phi.shape}")
        if np.any(phi < 0):
            raise InvalidGraphException("phi must be nonnegative")
        rho = (phi[:, None] + phi[None, :]) * (1.0 - np.eye(model.n))
        return Metric(rho=_frozen(rho), kind=MetricKind.WEIGHTED_DISCRETE)

    def geodesic_table(self, model, w=None, base=None):
        """Per-pair geodesic counts and w-lengths, per-edge through statistics.

        `base` is a table previously computed for the same model; its unit-length part
        (distance, sigma, through_count) is reused and only the w-lengths recomputed.
        """
        w = w or LengthFunction.uniform(model)
        if base is None:
            distance, sigma, through_count = self._unit_geodesics(model)
        else:
            distance, sigma, through_count = base.distance, base.sigma, base.through_count

        w_edge = w.oriented(model)
        # Total w-length over all geodesics a -> b counts each edge once per geodesic using it.
        wsum = np.tensordot(w_edge, through_count, axes=1)

        u, v = model.edges[:, 0], model.edges[:, 1]
        on_path = through_count > 0
        sigma_in = sigma[:, u].T[:, :, None]
        sigma_out = sigma[v][:, None, :]
        through_wsum = (
            wsum[:, u].T[:, :, None] * sigma_out
            + sigma_in * sigma_out * w_edge[:, None, None]
            + sigma_in * wsum[v][:, None, :]
        ) * on_path

        return GeodesicTable(
            distance=distance,
            sigma=sigma,
            through_count=through_count,
            wsum=_frozen(wsum),
            through_wsum=_frozen(through_wsum),
        )

    def b_constant(self, model, table=None):
        table = table or self.geodesic_table(model)
        return int(round(table.through_count.sum(axis=(1, 2)).max()))

    def diameter(self, model, table=None):
        table = table or self.geodesic_table(model)
        return int(table.distance.max())

    def enumerate_geodesics(self, model, x, y, cap=None):
        cap = cap or settings.INEQ_BRUTE_FORCE_PATH_CAP
        skeleton = nx.Graph()
        skeleton.add_nodes_from(range(model.n))
        skeleton.add_edges_from(model.undirected_edges.tolist())
        paths = []
        for path in nx.all_shortest_paths(skeleton, x, y):
            paths.append(tuple(path))
            if len(paths) > cap:
                raise TooManyPathsException(f"More than {cap} geodesics between {x} and {y}")
        return paths

    def _unit_geodesics(self, model):
        n = model.n
        adjacency = model.adjacency.astype(float)
        distance = shortest_path(adjacency, method='D', unweighted=True).astype(int)

        sigma = np.zeros((n, n))
        for x in range(n):
            sigma[x, x] = 1.0
            for layer in range(1, distance[x].max() + 1):
                targets = np.flatnonzero(distance[x] == layer)
                previous = np.where(distance[x] == layer - 1, sigma[x], 0.0)
                sigma[x, targets] = adjacency[targets] @ previous

        u, v = model.edges[:, 0], model.edges[:, 1]
        on_path = distance[:, u].T[:, :, None] + 1 + distance[v][:, None, :] == distance[None, :, :]
        through_count = np.where(on_path, sigma[:, u].T[:, :, None] * sigma[v][:, None, :], 0.0)
        logger.debug("Counted geodesics on %d vertices", n)
        return _frozen(distance, dtype=int), _frozen(sigma), _frozen(through_count)
