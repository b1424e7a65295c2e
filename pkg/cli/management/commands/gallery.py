from bounds.mappers import BoundReportMapper
from cli.management.base import ToolkitCommand
from graphs.mappers import ModelMapper
from graphs.services import ModelService


class Command(ToolkitCommand):
    help = 'Show a gallery model: mu, rates, conductances, degree statistics and reference values'

    def add_arguments(self, parser):
        parser.add_argument('family', help='complete | star | cycle | binary_tree | path | johnson')
        parser.add_argument('params', nargs='*', help='Integer parameters of the family')
        super().add_arguments(parser)

    def execute_command(self, options):
        source = ':'.join(['gallery', options['family'], *options['params']])
        service = self.report_service
        model = service.load_model(source)
        stats = ModelService().degree_stats(model)
        data = ModelMapper.to_dict(model, stats)
        data['reference'] = BoundReportMapper.to_dict(service.closed_form_service.closed_forms(model.family, model.params))
        return data, 'Gallery model built', {'model_source': source}
