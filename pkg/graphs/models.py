from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np


def _frozen(array, dtype=float):
    array = np.array(array, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class RateGraph:
    """Vertices plus oriented edges (u, v, q(u, v)) on dense integer indices."""

    vertices: tuple
    oriented_edges: tuple

    @classmethod
    def from_labels(cls, vertices, edges):
        index = {label: i for i, label in enumerate(vertices)}
        return cls(
            vertices=tuple(str(v) for v in vertices),
            oriented_edges=tuple((index[u], index[v], float(q)) for u, v, q in edges),
        )

    @classmethod
    def symmetric(cls, vertices, pairs, rate=1.0):
        edges = []
        for u, v in pairs:
            edges.append((u, v, rate))
            edges.append((v, u, rate))
        return cls.from_labels(vertices, edges)

    @property
    def vertex_count(self):
        return len(self.vertices)


@dataclass(frozen=True, eq=False)
class ReversibleModel:
    """Reversible nearest-neighbour jump process on a finite connected graph.

    `edges` lists oriented edges in lexicographic order; every per-edge array in the
    package (conductances, profiles, incidence tensors) is aligned with it.
    """

    graph: RateGraph
    mu: np.ndarray
    rates: np.ndarray
    edges: np.ndarray
    conductance: np.ndarray
    family: str = 'custom'
    params: tuple = field(default=())

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def n(self):
        return len(self.mu)

    @property
    def edge_count(self):
        return len(self.edges)

    @cached_property
    def adjacency(self):
        return _frozen(self.rates > 0, dtype=bool)

    @cached_property
    def degrees(self):
        return _frozen(self.adjacency.sum(axis=1), dtype=int)

    @cached_property
    def undirected_edges(self):
        return _frozen([(u, v) for u, v in self.edges if u < v], dtype=int)

    @cached_property
    def edge_index(self):
        return {(int(u), int(v)): k for k, (u, v) in enumerate(self.edges)}

    @cached_property
    def edge_class(self):
        """Index into `undirected_edges` for every oriented edge."""
        lookup = {(int(u), int(v)): k for k, (u, v) in enumerate(self.undirected_edges)}
        return _frozen([lookup[(min(u, v), max(u, v))] for u, v in self.edges], dtype=int)

    @cached_property
    def reverse(self):
        return _frozen([self.edge_index[(int(v), int(u))] for u, v in self.edges], dtype=int)

    @cached_property
    def conductance_matrix(self):
        matrix = np.zeros((self.n, self.n))
        matrix[self.edges[:, 0], self.edges[:, 1]] = self.conductance
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def generator(self):
        """Matrix of L: L f(x) = sum_y q(x, y) (f(y) - f(x))."""
        matrix = np.array(self.rates, dtype=float)
        np.fill_diagonal(matrix, -self.rates.sum(axis=1))
        matrix.setflags(write=False)
        return matrix

    def gradient(self, f):
        """D_e f = f(v) - f(u) for every oriented edge e = (u, v)."""
        f = np.asarray(f, dtype=float)
        return f[self.edges[:, 1]] - f[self.edges[:, 0]]

    def is_laplacian(self, rtol=1e-9):
        expected = self.adjacency / self.degrees[:, None]
        return bool(np.allclose(self.rates, expected, rtol=rtol, atol=0.0))

    def is_uniform(self, atol=1e-12):
        return bool(np.allclose(self.mu, 1.0 / self.n, rtol=0.0, atol=atol))


@dataclass(frozen=True)
class DegreeStats:
    d_star: int
    B: float
    edge_count: int
    vertex_count: int


@dataclass(frozen=True, eq=False)
class LengthFunction:
    """Positive weights on non-oriented edges, aligned with `undirected_edges`."""

    values: np.ndarray

    @classmethod
    def uniform(cls, model):
        return cls(_frozen(np.ones(len(model.undirected_edges))))

    @classmethod
    def inverse_conductance(cls, model):
        q = model.conductance_matrix[model.undirected_edges[:, 0], model.undirected_edges[:, 1]]
        return cls(_frozen(1.0 / q))

    def oriented(self, model):
        return self.values[model.edge_class]

    def scaled(self, factor):
        return LengthFunction(_frozen(self.values * factor))

    def normalized(self):
        return self.scaled(len(self.values) / self.values.sum())


class MetricKind(str, Enum):
    GRAPH = 'graph'
    DISCRETE = 'discrete'
    W_INDUCED = 'w-induced'
    WEIGHTED_DISCRETE = 'weighted-discrete'


@dataclass(frozen=True, eq=False)
class Metric:
    rho: np.ndarray
    kind: MetricKind

    @property
    def n(self):
        return len(self.rho)

    def lipschitz_norm(self, g):
        """max over pairs x != y of |g(x) - g(y)| / rho(x, y)."""
        g = np.asarray(g, dtype=float)
        diff = np.abs(g[:, None] - g[None, :])
        off = ~np.eye(self.n, dtype=bool)
        zero = off & (self.rho <= 0)
        if np.any(diff[zero] > 0):
            return np.inf
        usable = off & (self.rho > 0)
        if not np.any(usable):
            return 0.0
        return float(np.max(diff[usable] / self.rho[usable]))


@dataclass(frozen=True, eq=False)
class GeodesicTable:
    """Geodesic (unit edge length) statistics; w enters only through lengths.

    distance[x, y], sigma[x, y], wsum[x, y] are per ordered pair; through_count and
    through_wsum are indexed [edge, x, y].
    """

    distance: np.ndarray
    sigma: np.ndarray
    through_count: np.ndarray
    wsum: np.ndarray
    through_wsum: np.ndarray


class PathMode(str, Enum):
    GEODESIC = 'uniform-geodesic'
    TREE = 'tree-unique'
    EXPLICIT = 'explicit'


@dataclass(frozen=True, eq=False)
class PathSystem:
    """One (random) circle-free path per ordered pair.

    `incidence[e, x, y]` is E[1{e in gamma_xy}]. Deterministic modes also keep the
    vertex sequence of each path in `paths`; the geodesic mode keeps its unit
    GeodesicTable instead of enumerating paths.
    """

    model: ReversibleModel
    mode: PathMode
    incidence: np.ndarray
    paths: dict = None
    geodesics: GeodesicTable = None

    @cached_property
    def symmetric(self):
        """True when gamma_yx is gamma_xy reversed (in law)."""
        flipped = np.transpose(self.incidence[self.model.reverse], (0, 2, 1))
        return bool(np.allclose(self.incidence, flipped, rtol=0.0, atol=1e-12))
