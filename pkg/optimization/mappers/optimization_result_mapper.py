class OptimizationResultMapper:

    @staticmethod
    def to_dict(model, objective, result):
        return {
            'objective': objective.kind.value,
            'inputs': dict(objective.inputs),
            'value_best': result.value_best,
            'value_at_uniform': result.value_at_uniform,
            'bound': 'upper',
            'iterations': result.iterations,
            'restarts': result.restarts,
            'best_restart': result.best_restart,
            'converged': result.converged,
            'w_best': OptimizationResultMapper._map_weights(model, result.w_best),
        }

    @staticmethod
    def _map_weights(model, w):
        return [
            {'u': model.vertices[u], 'v': model.vertices[v], 'w': float(value)}
            for (u, v), value in zip(model.undirected_edges, w.values)
        ]
