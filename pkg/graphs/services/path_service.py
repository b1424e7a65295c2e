import networkx as nx
import numpy as np

from graphs.exceptions import InvalidPathException, NotATreeException
from graphs.models import LengthFunction, PathMode, PathSystem, _frozen
from graphs.services.metric_service import MetricService


class PathService:

    def __init__(self, metric_service=None):
        self.metric_service = metric_service or MetricService()

    def path_system(self, model, mode, paths=None):
        mode = PathMode(mode)
        if mode is PathMode.GEODESIC:
            table = self.metric_service.geodesic_table(model)
            with np.errstate(invalid='ignore', divide='ignore'):
                incidence = np.where(table.through_count > 0, table.through_count / table.sigma[None], 0.0)
            return PathSystem(model=model, mode=mode, incidence=_frozen(incidence), geodesics=table)

        if mode is PathMode.TREE:
            paths = self._tree_paths(model)
        else:
            paths = self._validate_explicit(model, paths or {})
        return PathSystem(model=model, mode=mode, incidence=self._incidence(model, paths), paths=paths)

    def traversal(self, paths, w=None):
        """E[1{e in gamma_xy} |gamma_xy|_w] indexed [edge, x, y]."""
        model = paths.model
        w = w or LengthFunction.uniform(model)
        if paths.mode is PathMode.GEODESIC:
            table = self.metric_service.geodesic_table(model, w, base=paths.geodesics)
            sigma = table.sigma[None]
            return np.where(table.through_count > 0, table.through_wsum / sigma, 0.0)
        lengths = np.tensordot(w.oriented(model), paths.incidence, axes=1)
        return paths.incidence * lengths[None]

    def edge_expectation(self, paths, w, kernel, traversal=None):
        """h(e) = sum_{x,y} E[1{e in gamma_xy} |gamma_xy|_w] kernel(x, y) mu(x) mu(y)."""
        model = paths.model
        kernel = self._kernel_matrix(model, kernel)
        if traversal is None:
            traversal = self.traversal(paths, w)
        weight = kernel * np.outer(model.mu, model.mu)
        return np.tensordot(traversal, weight, axes=([1, 2], [0, 1]))

    def incidence_expectation(self, paths, kernel):
        model = paths.model
        weight = self._kernel_matrix(model, kernel) * np.outer(model.mu, model.mu)
        return np.tensordot(paths.incidence, weight, axes=([1, 2], [0, 1]))

    def _kernel_matrix(self, model, kernel):
        if callable(kernel):
            return np.array([[kernel(x, y) for y in range(model.n)] for x in range(model.n)], dtype=float)
        kernel = np.asarray(kernel, dtype=float)
        if kernel.ndim == 0:
            return np.full((model.n, model.n), float(kernel))
        return kernel

    def _tree_paths(self, model):
        skeleton = nx.Graph()
        skeleton.add_nodes_from(range(model.n))
        skeleton.add_edges_from(model.undirected_edges.tolist())
        if not nx.is_tree(skeleton):
            raise NotATreeException("Unique circle-free paths need a tree")
        paths = {}
        for x, targets in nx.all_pairs_shortest_path(skeleton):
            for y, path in targets.items():
                if x != y:
                    paths[(x, y)] = tuple(path)
        return paths

    def _validate_explicit(self, model, paths):
        checked = {}
        for (x, y), path in paths.items():
            path = tuple(int(v) for v in path)
            if x == y:
                raise InvalidPathException(f"Path given for the diagonal pair ({x}, {x})")
            if len(path) < 2 or path[0] != x or path[-1] != y:
                raise InvalidPathException(f"Path for ({x}, {y}) does not run from {x} to {y}")
            if len(set(path)) != len(path):
                raise InvalidPathException(f"Path for ({x}, {y}) repeats a vertex")
            for a, b in zip(path, path[1:]):
                if (a, b) not in model.edge_index:
                    raise InvalidPathException(f"Path for ({x}, {y}) uses a non-edge ({a}, {b})")
            checked[(int(x), int(y))] = path

        for x in range(model.n):
            for y in range(model.n):
                if x != y and (x, y) not in checked:
                    raise InvalidPathException(
                        f"No path given from {model.vertices[x]} to {model.vertices[y]}"
                    )
        return checked

    def _incidence(self, model, paths):
        incidence = np.zeros((model.edge_count, model.n, model.n))
        for (x, y), path in paths.items():
            for a, b in zip(path, path[1:]):
                incidence[model.edge_index[(a, b)], x, y] = 1.0
        return _frozen(incidence)
