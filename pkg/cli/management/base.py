import logging
from pathlib import Path

import numpy as np
from django.core.management.base import BaseCommand, CommandError

from bounds.exceptions import BoundsException
from cli.exceptions import CliException
from cli.mappers import ManifestMapper
from cli.result import CommandResult
from cli.services import ManifestService, ReportService
from graphs.exceptions import GraphException
from optimization.exceptions import OptimizationException
from oracles.exceptions import OracleException
from simulation.exceptions import SimulationException

logger = logging.getLogger(__name__)

TOOLKIT_EXCEPTIONS = (
    GraphException,
    BoundsException,
    OracleException,
    OptimizationException,
    SimulationException,
    CliException,
)

INPUT_ERROR = 1
COMPUTATION_ERROR = 2


class ToolkitCommand(BaseCommand):
    """Runs `execute`, wraps the body with a RunManifest and maps failures to exit codes.

    Input errors exit with 1, numerical failures with 2.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.report_service = ReportService()
        self.manifest_service = ManifestService(self.report_service.graph_repository)

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=None, help='Master seed (defaults to INEQ_SEED)')
        parser.add_argument('--threads', type=int, default=None, help='Cap on worker threads')
        parser.add_argument('--out', default=None, help='Write the JSON report here instead of stdout')

    def execute_command(self, options):
        """Returns (data, message, manifest inputs dict)."""
        raise NotImplementedError

    def handle(self, *args, **options):
        if options['threads'] is not None and options['threads'] < 1:
            self._fail('--threads must be at least 1', INPUT_ERROR)
        try:
            data, message, manifest_inputs = self.execute_command(options)
            manifest_inputs.setdefault('seed', options['seed'])
            manifest = self.manifest_service.manifest(
                command=self.command_name(),
                outputs=[options['out'] or 'stdout'],
                options=self._recorded_options(options),
                **manifest_inputs,
            )
            body = CommandResult.ok(
                command=self.command_name(),
                report=data,
                manifest=ManifestMapper.to_dict(manifest),
                message=message,
            ).to_json()
        except TOOLKIT_EXCEPTIONS as e:
            self._fail(str(e), INPUT_ERROR if e.input_error else COMPUTATION_ERROR, type(e).__name__)
        except (ValueError, ArithmeticError, np.linalg.LinAlgError) as e:
            self._fail(str(e), COMPUTATION_ERROR, type(e).__name__)

        if options['out']:
            try:
                Path(options['out']).write_text(body + '\n', encoding='utf-8')
            except OSError as e:
                self._fail(f"Cannot write {options['out']}: {e.strerror}", INPUT_ERROR, type(e).__name__)
            logger.info("Report written to %s", options['out'])
        else:
            self.stdout.write(body)

    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def _recorded_options(self, options):
        skipped = {'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color', 'skip_checks'}
        return {key: value for key, value in options.items() if key not in skipped}

    def _fail(self, message, code, kind=None):
        logger.warning("%s failed (exit %d): %s", self.command_name(), code, message)
        result = CommandResult.fail(command=self.command_name(), message=message, exit_code=code, error_type=kind)
        self.stderr.write(result.to_json())
        raise CommandError(message, returncode=code)
