from itertools import combinations

from graphs.exceptions import BadParamsException
from graphs.models import RateGraph
from graphs.services.model_service import ModelService


class GalleryService:

    FAMILIES = ('complete', 'star', 'cycle', 'binary_tree', 'path', 'johnson')

    def __init__(self, model_service=None):
        self.model_service = model_service or ModelService()

    def gallery(self, family, params=(), rates=None):
        builder = getattr(self, f'_{family}', None)
        if family not in self.FAMILIES or builder is None:
            raise BadParamsException(
                f"Unknown family: {family}. Allowed families: {', '.join(self.FAMILIES)}"
            )
        try:
            params = tuple(int(p) for p in params)
        except (TypeError, ValueError):
            raise BadParamsException(f"Parameters for {family} must be integers: {params}")

        if family == 'path':
            return builder(params, rates)
        if rates is not None:
            raise BadParamsException("Only the path family accepts explicit rates")
        return builder(params)

    def _require(self, family, params, count, minimum):
        if len(params) != count:
            raise BadParamsException(f"{family} takes {count} parameter(s), got {len(params)}")
        if params[0] < minimum:
            raise BadParamsException(f"{family} requires parameter >= {minimum}, got {params[0]}")

    def _laplacian(self, family, params, vertices, pairs):
        return self.model_service.laplacian_model(vertices, pairs, family=family, params=params)

    def _complete(self, params):
        self._require('complete', params, 1, 2)
        n = params[0]
        vertices = [str(i) for i in range(n)]
        return self._laplacian('complete', params, vertices, combinations(vertices, 2))

    def _star(self, params):
        self._require('star', params, 1, 1)
        n = params[0]
        vertices = [f'v{i}' for i in range(n + 1)]
        return self._laplacian('star', params, vertices, [('v0', v) for v in vertices[1:]])

    def _cycle(self, params):
        self._require('cycle', params, 1, 3)
        p = params[0]
        vertices = [str(i) for i in range(p)]
        pairs = [(vertices[i], vertices[(i + 1) % p]) for i in range(p)]
        return self._laplacian('cycle', params, vertices, pairs)

    def _binary_tree(self, params):
        self._require('binary_tree', params, 1, 1)
        d = params[0]
        size = 2 ** (d + 1) - 1
        vertices = [str(i) for i in range(size)]
        pairs = [(str((i - 1) // 2), str(i)) for i in range(1, size)]
        return self._laplacian('binary_tree', params, vertices, pairs)

    def _path(self, params, rates=None):
        """Birth-death chain on 0..n-1; rates is a list of (q(i, i+1), q(i+1, i))."""
        self._require('path', params, 1, 2)
        n = params[0]
        vertices = [str(i) for i in range(n)]
        pairs = [(vertices[i], vertices[i + 1]) for i in range(n - 1)]
        if rates is None:
            return self._laplacian('path', params, vertices, pairs)

        rates = list(rates)
        if len(rates) != n - 1:
            raise BadParamsException(f"path({n}) needs {n - 1} rate pairs, got {len(rates)}")
        edges = []
        for (u, v), (forward, backward) in zip(pairs, rates):
            edges.append((u, v, forward))
            edges.append((v, u, backward))
        graph = RateGraph.from_labels(vertices, edges)
        return self.model_service.build_model(graph, family='path', params=params)

    def _johnson(self, params):
        if len(params) != 2:
            raise BadParamsException(f"johnson takes 2 parameters, got {len(params)}")
        n, k = params
        if n < 2 or not 1 <= k <= n - 1:
            raise BadParamsException(f"johnson requires 1 <= k <= n-1, got n={n}, k={k}")
        subsets = [frozenset(c) for c in combinations(range(1, n + 1), k)]
        labels = ['-'.join(str(i) for i in sorted(s)) for s in subsets]
        pairs = [
            (labels[i], labels[j])
            for i, j in combinations(range(len(subsets)), 2)
            if k - len(subsets[i] & subsets[j]) == 1
        ]
        return self._laplacian('johnson', params, labels, pairs)
