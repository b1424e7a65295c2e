from pathlib import Path

from bounds.mappers import BoundReportMapper
from cli.management.base import ToolkitCommand
from optimization.mappers import OptimizationResultMapper
from optimization.models import OptimizationConfig
from optimization.repositories import TraceRepository


class Command(ToolkitCommand):
    help = 'Path-method bounds (Poincare, log-Sobolev, K, kappa and corollaries) for one model'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Graph JSON file or gallery:NAME:PARAMS')
        parser.add_argument('--metric', default='graph', help='graph | discrete | wdist | phi:FILE')
        parser.add_argument('--w', default='uniform', help='uniform | invq | file:PATH | optimize')
        parser.add_argument('--paths', default='geodesic', help='geodesic | tree | file:PATH')
        parser.add_argument('--restarts', type=int, default=None)
        parser.add_argument('--max-iters', type=int, default=None)
        parser.add_argument('--tol', type=float, default=None)
        parser.add_argument('--trace-dir', default=None, help='Dump each optimization trace as <objective>.csv')
        super().add_arguments(parser)

    def execute_command(self, options):
        config = OptimizationConfig.from_settings(
            restarts=options['restarts'],
            max_iters=options['max_iters'],
            tol=options['tol'],
            seed=options['seed'],
            max_workers=options['threads'],
        )
        model, report, runs = self.report_service.bounds_report(
            options['graph'],
            metric=options['metric'],
            w=options['w'],
            paths=options['paths'],
            config=config,
        )

        data = BoundReportMapper.to_dict(report)
        if runs:
            data['optimizations'] = [OptimizationResultMapper.to_dict(model, objective, result) for objective, result in runs]
            if options['trace_dir']:
                repository = TraceRepository()
                for objective, result in runs:
                    repository.save(result, Path(options['trace_dir']) / f'{objective.kind.value}.csv')

        files = {}
        for flag in ('metric', 'w', 'paths'):
            _, sep, path = options[flag].partition(':')
            if sep:
                files[flag] = path
        return data, 'Bounds computed', {'model_source': options['graph'], 'files': files}
