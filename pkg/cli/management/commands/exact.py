from cli.management.base import ToolkitCommand
from oracles.mappers import OracleResultMapper


class Command(ToolkitCommand):
    help = 'Exact reference quantities: cp, w1, entropy, cheeger, lslower, avar'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Graph JSON file or gallery:NAME:PARAMS')
        parser.add_argument('--quantity', required=True, choices=['cp', 'w1', 'entropy', 'cheeger', 'lslower', 'avar'])
        parser.add_argument('--metric', default='graph', help='graph | discrete | wdist | phi:FILE')
        parser.add_argument('--nu', default=None, help='Probability vector: file or inline JSON')
        parser.add_argument('--nu2', default=None, help='Second probability vector for w1')
        parser.add_argument('--h', default=None, help='Observable for avar (default: spectral-gap eigenfunction)')
        parser.add_argument('--restarts', type=int, default=None)
        parser.add_argument('--iterations', type=int, default=None)
        super().add_arguments(parser)

    def execute_command(self, options):
        model, quantity, result = self.report_service.exact(
            options['graph'],
            options['quantity'],
            metric=options['metric'],
            nu=options['nu'],
            nu2=options['nu2'],
            h=options['h'],
            restarts=options['restarts'],
            iterations=options['iterations'],
            seed=options['seed'],
            threads=options['threads'],
        )

        if quantity == 'cp':
            data = OracleResultMapper.spectral(model, result['spectral'])
            low, high = result['discrete_window']
            data['discrete_gaussian_window'] = {'lower': low, 'upper': high}
        elif quantity == 'w1':
            data = OracleResultMapper.transport(model, result)
        elif quantity == 'entropy':
            data = OracleResultMapper.information(result)
        elif quantity == 'cheeger':
            data = OracleResultMapper.cheeger(model, result)
        elif quantity == 'lslower':
            data = OracleResultMapper.log_sobolev(model, result)
        else:
            data = OracleResultMapper.variance(result['value'], result['gaussian_lower'])

        files = {flag: options[flag] for flag in ('nu', 'nu2', 'h') if options[flag] is not None}
        if options['metric'].startswith('phi:'):
            files['metric'] = options['metric'][len('phi:'):]
        return data, f'{quantity} computed', {'model_source': options['graph'], 'files': files}
