import logging

import networkx as nx
import numpy as np

from graphs.exceptions import (
    InvalidGraphException,
    NonpositiveRateException,
    NotConnectedException,
    NotReversibleException,
)
from graphs.models import DegreeStats, RateGraph, ReversibleModel, _frozen

logger = logging.getLogger(__name__)

BALANCE_RTOL = 1e-9


class ModelService:

    def build_model(self, graph, family='custom', params=()):
        rates = self._rate_matrix(graph)
        skeleton = self._skeleton(graph.vertex_count, rates)

        # Propagate mu along a BFS spanning tree rooted at vertex 0.
        weight = np.zeros(graph.vertex_count)
        weight[0] = 1.0
        for x, y in nx.bfs_edges(skeleton, 0):
            weight[y] = weight[x] * rates[x, y] / rates[y, x]
        mu = weight / weight.sum()

        flux = mu[:, None] * rates
        mismatch = np.abs(flux - flux.T)
        scale = np.maximum(flux, flux.T)
        bad = mismatch > BALANCE_RTOL * scale
        if np.any(bad):
            x, y = np.argwhere(bad)[0]
            raise NotReversibleException(
                f"Detailed balance fails on edge ({graph.vertices[x]}, {graph.vertices[y]})"
            )

        return self._assemble(graph, rates, mu, flux, family, params)

    def laplacian_model(self, vertices, pairs, family='custom', params=()):
        """Random walk q(x, y) = 1/d_x, for which mu(x) = d_x/|E| and Q = 1/|E|."""
        vertices = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        if n < 2 or len(index) != n:
            raise InvalidGraphException("Graph needs at least two uniquely labelled vertices")
        adjacency = np.zeros((n, n), dtype=bool)
        for u, v in pairs:
            i, j = index[str(u)], index[str(v)]
            if i == j:
                raise InvalidGraphException(f"Self-loop at vertex {u}")
            adjacency[i, j] = adjacency[j, i] = True

        self._skeleton(n, adjacency.astype(float))
        degrees = adjacency.sum(axis=1)
        edge_total = int(adjacency.sum())
        rates = adjacency / degrees[:, None]
        mu = degrees / edge_total

        edges = [(vertices[i], vertices[j], rates[i, j]) for i, j in np.argwhere(adjacency)]
        graph = RateGraph.from_labels(vertices, edges)
        flux = np.where(adjacency, 1.0 / edge_total, 0.0)
        return self._assemble(graph, rates, mu, flux, family, params)

    def degree_stats(self, model):
        return DegreeStats(
            d_star=int(model.degrees.max()),
            B=float(model.rates.sum(axis=1).max()),
            edge_count=model.edge_count,
            vertex_count=model.n,
        )

    def _rate_matrix(self, graph):
        n = graph.vertex_count
        if n < 2:
            raise InvalidGraphException("Graph needs at least two vertices")
        if len(set(graph.vertices)) != n:
            raise InvalidGraphException("Vertex labels must be unique")

        rates = np.zeros((n, n))
        for u, v, q in graph.oriented_edges:
            if u == v:
                raise InvalidGraphException(f"Self-loop at vertex {graph.vertices[u]}")
            if not np.isfinite(q) or q <= 0:
                raise NonpositiveRateException(
                    f"Rate q({graph.vertices[u]}, {graph.vertices[v]}) = {q} is not positive"
                )
            if rates[u, v] > 0:
                raise InvalidGraphException(
                    f"Duplicate edge ({graph.vertices[u]}, {graph.vertices[v]})"
                )
            rates[u, v] = q

        one_way = (rates > 0) != (rates.T > 0)
        if np.any(one_way):
            u, v = np.argwhere(one_way)[0]
            raise InvalidGraphException(
                f"Edge relation is not symmetric at ({graph.vertices[u]}, {graph.vertices[v]})"
            )
        return rates

    def _skeleton(self, n, rates):
        skeleton = nx.Graph()
        skeleton.add_nodes_from(range(n))
        skeleton.add_edges_from((int(u), int(v)) for u, v in np.argwhere(rates > 0))
        if n == 0 or not nx.is_connected(skeleton):
            raise NotConnectedException("Graph is not connected")
        return skeleton

    def _assemble(self, graph, rates, mu, flux, family, params):
        edges = np.argwhere(rates > 0)
        # Q(x, y) and Q(y, x) agree to 1e-9; store the symmetric mean so reversal is exact.
        symmetric_flux = 0.5 * (flux + flux.T)
        conductance = symmetric_flux[edges[:, 0], edges[:, 1]]
        model = ReversibleModel(
            graph=graph,
            mu=_frozen(mu),
            rates=_frozen(rates),
            edges=_frozen(edges, dtype=int),
            conductance=_frozen(conductance),
            family=family,
            params=tuple(params),
        )
        logger.debug("Built %s model: %d vertices, %d oriented edges", family, model.n, model.edge_count)
        return model
