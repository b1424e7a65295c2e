import logging

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from bounds.exceptions import (
    NotLaplacianException,
    NotUniformException,
    TooLargeException,
    UnknownSymmetryException,
)
from bounds.models import BoundReport, EdgeOrbits, FormulaTag
from bounds.services.closed_form_service import ClosedFormService
from graphs.services import MetricService

logger = logging.getLogger(__name__)

MAX_ORBIT_VERTICES = 10

SYMMETRY_CLASSES = ('edge', 'vertex', 'distance')


class SymmetryService:

    def __init__(self, metric_service=None, closed_form_service=None):
        self.metric_service = metric_service or MetricService()
        self.closed_form_service = closed_form_service or ClosedFormService()

    def edge_orbits(self, model):
        if model.n > MAX_ORBIT_VERTICES:
            raise TooLargeException(f"Automorphism search is limited to {MAX_ORBIT_VERTICES} vertices")

        skeleton = nx.Graph()
        skeleton.add_nodes_from(range(model.n))
        skeleton.add_edges_from(model.undirected_edges.tolist())

        edges = [tuple(int(x) for x in e) for e in model.undirected_edges]
        edge_orbits = self._orbits(skeleton, edges, lambda e: {e[0]: 1, e[1]: 1})
        vertex_orbits = self._orbits(skeleton, [(x,) for x in range(model.n)], lambda v: {v[0]: 1})

        distance = self.metric_service.geodesic_table(model).distance
        distance_transitive = len(vertex_orbits) == 1
        for d in range(1, int(distance.max()) + 1 if distance_transitive else 1):
            pairs = [(int(x), int(y)) for x, y in np.argwhere(distance == d)]
            if len(self._orbits(skeleton, pairs, lambda p: {p[0]: 1, p[1]: 2})) > 1:
                distance_transitive = False
                break

        index = max(len(edges) / len(orbit) for orbit in edge_orbits)
        orbits = EdgeOrbits(
            edge_orbits=tuple(tuple(edges.index(e) for e in orbit) for orbit in edge_orbits),
            vertex_orbits=tuple(tuple(v[0] for v in orbit) for orbit in vertex_orbits),
            index=index,
            edge_transitive=len(edge_orbits) == 1,
            vertex_transitive=len(vertex_orbits) == 1,
            distance_transitive=distance_transitive,
        )
        logger.debug("Found %d edge orbits, %d vertex orbits", len(edge_orbits), len(vertex_orbits))
        return orbits

    def symmetry_bounds(self, model, v0=0, assume=None):
        """Symmetry-class bounds on kappa, K and c_G for the Laplacian with the graph metric.

        With `assume` (a subset of 'edge', 'vertex', 'distance') the caller asserts the
        classes; otherwise edge_orbits decides them. The report records which.
        """
        if not model.is_laplacian():
            raise NotLaplacianException("Symmetry bounds are stated for the Laplacian")

        if assume is None:
            orbits = self.edge_orbits(model)
            classes = {
                'edge': orbits.edge_transitive,
                'vertex': orbits.vertex_transitive,
                'distance': orbits.distance_transitive,
            }
            index = orbits.index
            source = 'computed'
        else:
            unknown = set(assume) - set(SYMMETRY_CLASSES)
            if unknown:
                raise UnknownSymmetryException(f"Unknown symmetry classes: {', '.join(sorted(unknown))}")
            # distance-transitive graphs are edge- and vertex-transitive
            classes = {name: name in assume or 'distance' in assume for name in SYMMETRY_CLASSES}
            orbits = None
            # Without orbits, index(G) <= degree is the available bound.
            index = 1.0 if classes['distance'] else float(model.degrees.max())
            source = 'asserted'

        rho = self.metric_service.graph_metric(model).rho
        report = BoundReport()
        if orbits is not None:
            report.add('index', index, FormulaTag.INDEX, symmetry=source)

        if classes['edge']:
            kappa_et = float(model.mu @ rho ** 2 @ model.mu)
            report.add('kappa_edge_transitive', kappa_et, FormulaTag.EDGE_TRANSITIVE, symmetry=source)
            report.add('gaussian_edge_transitive', kappa_et ** 2 * model.rates.sum(axis=1).max(),
                       FormulaTag.EDGE_TRANSITIVE, symmetry=source)

        if classes['vertex'] or classes['distance']:
            if not model.is_uniform():
                raise NotUniformException("Vertex-transitive bounds need the uniform measure")
            second = float(model.mu @ rho[:, v0] ** 2)
            fourth = float(model.mu @ rho[:, v0] ** 4)

            if classes['vertex']:
                kappa_vt = index * second
                K_vt = index * fourth
                report.add('kappa_vertex_transitive', kappa_vt, FormulaTag.VERTEX_TRANSITIVE, symmetry=source, v0=v0, index=index)
                report.add('K_vertex_transitive', K_vt, FormulaTag.VERTEX_TRANSITIVE, symmetry=source, v0=v0, index=index)
                report.add('gaussian_vertex_transitive', min(K_vt, kappa_vt ** 2), FormulaTag.VERTEX_TRANSITIVE,
                           symmetry=source, v0=v0, index=index)

            if classes['distance']:
                report.add('kappa_distance_transitive', second, FormulaTag.DISTANCE_TRANSITIVE, symmetry=source, v0=v0)
                report.add('gaussian_distance_transitive', second ** 2, FormulaTag.DISTANCE_TRANSITIVE,
                           symmetry=source, v0=v0)

        if model.family == 'johnson':
            n, k = model.params
            report.add('kappa_johnson', self.closed_form_service.johnson_kappa(n, k), FormulaTag.JOHNSON, n=n, k=k)
        return report

    def _orbits(self, skeleton, items, marks):
        orbits = []
        for item in items:
            for orbit in orbits:
                if self._related(skeleton, marks(orbit[0]), marks(item)):
                    orbit.append(item)
                    break
            else:
                orbits.append([item])
        return orbits

    def _related(self, skeleton, source_marks, target_marks):
        first = skeleton.copy()
        second = skeleton.copy()
        nx.set_node_attributes(first, 0, 'mark')
        nx.set_node_attributes(second, 0, 'mark')
        nx.set_node_attributes(first, source_marks, 'mark')
        nx.set_node_attributes(second, target_marks, 'mark')
        matcher = GraphMatcher(first, second, node_match=lambda a, b: a['mark'] == b['mark'])
        return matcher.is_isomorphic()
