from cli.management.base import ToolkitCommand
from simulation.mappers import ConcentrationReportMapper


class Command(ToolkitCommand):
    help = 'Monte Carlo check of Gaussian concentration for time averages'

    def add_arguments(self, parser):
        parser.add_argument('config', help='Experiment config JSON (model, g, t, r, trials, ...)')
        super().add_arguments(parser)

    def execute_command(self, options):
        model, reports, origin, seed = self.report_service.simulate(
            options['config'],
            seed=options['seed'],
            threads=options['threads'],
        )
        data = ConcentrationReportMapper.to_dict(reports)
        data['cG_upper_source'] = origin
        data['vertices'] = list(model.vertices)
        return data, 'Simulation finished', {'files': {'config': options['config']}, 'seed': seed}
