class ModelMapper:

    @staticmethod
    def to_dict(model, stats=None):
        data = {
            'family': model.family,
            'params': list(model.params),
            'vertices': list(model.vertices),
            'mu': {v: float(m) for v, m in zip(model.vertices, model.mu)},
            'edges': [
                {
                    'u': model.vertices[u],
                    'v': model.vertices[v],
                    'q': float(model.rates[u, v]),
                    'Q': float(q),
                }
                for (u, v), q in zip(model.edges, model.conductance)
            ],
        }
        if stats is not None:
            data['degree_stats'] = {
                'd_star': stats.d_star,
                'B': stats.B,
                'edge_count': stats.edge_count,
                'vertex_count': stats.vertex_count,
            }
        return data
