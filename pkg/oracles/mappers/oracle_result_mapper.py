def _by_vertex(model, values):
    return {label: float(value) for label, value in zip(model.vertices, values)}


class OracleResultMapper:

    @staticmethod
    def spectral(model, result):
        return {
            'quantity': 'cp',
            'value': result.cp,
            'gap': result.gap,
            'eigenvalues': [float(v) for v in result.eigenvalues],
            'eigenfunction': _by_vertex(model, result.eigenfunction),
        }

    @staticmethod
    def transport(model, result):
        return {
            'quantity': 'w1',
            'value': result.value,
            'duality_gap': result.gap,
            'witness': _by_vertex(model, result.witness),
            'plan': [
                {'from': model.vertices[x], 'to': model.vertices[y], 'mass': float(result.plan.matrix[x, y])}
                for x in range(model.n)
                for y in range(model.n)
                if result.plan.matrix[x, y] > 0
            ],
        }

    @staticmethod
    def information(result):
        return {'quantity': 'entropy', 'H': result.H, 'I': result.I}

    @staticmethod
    def cheeger(model, result):
        return {
            'quantity': 'cheeger',
            'value': result.value,
            'bound': 'lower',
            'subset': [model.vertices[x] for x in result.subset],
            'density': _by_vertex(model, result.density),
        }

    @staticmethod
    def log_sobolev(model, result):
        return {
            'quantity': 'lslower',
            'value': result.value,
            'bound': 'lower',
            'eigenfunction_ratio': result.eigenfunction_ratio,
            'starts': result.restarts,
            'witness': _by_vertex(model, result.witness),
        }

    @staticmethod
    def variance(value, gaussian_lower=None):
        data = {'quantity': 'avar', 'value': value}
        if gaussian_lower is not None:
            data['gaussian_lower'] = gaussian_lower
        return data
