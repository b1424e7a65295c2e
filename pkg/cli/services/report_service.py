import json
import logging
from pathlib import Path

import numpy as np
from django.conf import settings

from bounds.models import BoundReport, FormulaTag
from bounds.services import BoundService, ClosedFormService, CorollaryService, SymmetryService
from bounds.services.symmetry_service import MAX_ORBIT_VERTICES
from cli.exceptions import ConfigFileException, MissingArgumentException, UnknownOptionException
from graphs.models import LengthFunction, PathMode
from graphs.repositories import GraphRepository, PathRepository
from graphs.services import MetricService, PathService
from optimization.models import ObjectiveKind, OptimizationConfig
from optimization.services import ObjectiveService, OptimizeService
from oracles.models import ProbabilityVector
from oracles.services import (
    CheegerService,
    InformationService,
    LsService,
    SpectralService,
    TransportService,
    VarianceService,
)
from simulation.exceptions import InvalidExperimentException
from simulation.serializers import ExperimentConfigSerializer
from simulation.services import SimulationService

logger = logging.getLogger(__name__)

FILE_PREFIX = 'file:'
PHI_PREFIX = 'phi:'

PATH_MODES = {
    'geodesic': PathMode.GEODESIC,
    'tree': PathMode.TREE,
}

EXACT_QUANTITIES = ('cp', 'w1', 'entropy', 'cheeger', 'lslower', 'avar')


class ReportService:

    def __init__(self, graph_repository=None, path_repository=None, metric_service=None, path_service=None):
        self.graph_repository = graph_repository or GraphRepository()
        self.path_repository = path_repository or PathRepository()
        self.metric_service = metric_service or MetricService()
        self.path_service = path_service or PathService(self.metric_service)
        self.bound_service = BoundService(self.path_service)
        self.corollary_service = CorollaryService(self.metric_service)
        self.symmetry_service = SymmetryService(self.metric_service)
        self.closed_form_service = ClosedFormService()
        self.objective_service = ObjectiveService(self.bound_service)
        self.optimize_service = OptimizeService()
        self.spectral_service = SpectralService()
        self.transport_service = TransportService()
        self.information_service = InformationService()
        self.cheeger_service = CheegerService(self.transport_service)
        self.ls_service = LsService(self.spectral_service)
        self.variance_service = VarianceService(self.spectral_service)
        self.simulation_service = SimulationService(self.information_service)

    def load_model(self, source):
        return self.graph_repository.load(source)

    def resolve_metric(self, model, option, w=None):
        """Returns (metric, phi); phi is set only for the weighted discrete metric."""
        if option == 'graph':
            return self.metric_service.graph_metric(model), None
        if option == 'discrete':
            return self.metric_service.discrete_metric(model), None
        if option == 'wdist':
            return self.metric_service.all_pairs_distance(model, w), None
        if option.startswith(PHI_PREFIX):
            phi = self.graph_repository.load_vector(model, option[len(PHI_PREFIX):])
            return self.metric_service.weighted_discrete_metric(model, phi), phi
        raise UnknownOptionException(f"Unknown metric: {option}. Allowed: graph, discrete, wdist, phi:FILE")

    def resolve_paths(self, model, option):
        if option in PATH_MODES:
            return self.path_service.path_system(model, PATH_MODES[option])
        if option.startswith(FILE_PREFIX):
            paths = self.path_repository.load(model, option[len(FILE_PREFIX):])
            return self.path_service.path_system(model, PathMode.EXPLICIT, paths)
        raise UnknownOptionException(f"Unknown path system: {option}. Allowed: geodesic, tree, file:PATH")

    def resolve_w(self, model, option):
        if option == 'uniform':
            return LengthFunction.uniform(model)
        if option == 'invq':
            return LengthFunction.inverse_conductance(model)
        if option == 'optimize':
            return None
        if option.startswith(FILE_PREFIX):
            return self.graph_repository.load_length_function(model, option[len(FILE_PREFIX):])
        raise UnknownOptionException(f"Unknown length function: {option}. Allowed: uniform, invq, file:PATH, optimize")

    def bounds_report(self, source, metric='graph', w='uniform', paths='geodesic', config=None):
        model = self.load_model(source)
        path_system = self.resolve_paths(model, paths)
        fixed_w = self.resolve_w(model, w)
        rho, phi = self.resolve_metric(model, metric, fixed_w)

        bounds = self.bound_service
        report = BoundReport()
        common = {'paths': path_system.mode.value}

        report.add('poincare_conductance', bounds.poincare_bound(path_system, None),
                   FormulaTag.POINCARE_CONDUCTANCE, w='invq', **common)

        runs = []
        if fixed_w is None:
            config = config or OptimizationConfig.from_settings()
            objectives = [
                ('poincare', FormulaTag.POINCARE_LENGTH, self.objective_service.objective(path_system, ObjectiveKind.POINCARE)),
                ('log_sobolev', FormulaTag.LOG_SOBOLEV, self.objective_service.objective(path_system, ObjectiveKind.LS_BOUND)),
                ('K', FormulaTag.TRANSPORT_INFORMATION,
                 self.objective_service.objective(path_system, ObjectiveKind.K_CONSTANT, rho=rho)),
            ]
            if phi is not None:
                objectives.append(('weighted_poincare', FormulaTag.WEIGHTED_POINCARE,
                                   self.objective_service.objective(path_system, ObjectiveKind.WEIGHTED_POINCARE, phi=phi)))
            for name, formula, objective in objectives:
                result = self.optimize_service.optimize_w(model, path_system, objective, config)
                runs.append((objective, result))
                report.add(name, result.value_best, formula, w='optimized', metric=rho.kind.value,
                           value_at_uniform=result.value_at_uniform, converged=result.converged, **common)
            K = report.value('K')
        else:
            w_label = w if not w.startswith(FILE_PREFIX) else 'file'
            report.add('poincare', bounds.poincare_bound(path_system, fixed_w),
                       FormulaTag.POINCARE_LENGTH, w=w_label, **common)
            ls_value = bounds.ls_bound(path_system, fixed_w)
            report.add('log_sobolev', ls_value, FormulaTag.LOG_SOBOLEV, w=w_label,
                       **self._circle_check(model, w, paths, ls_value), **common)
            K = bounds.K_constant(path_system, fixed_w, rho)
            report.add('K', K, FormulaTag.TRANSPORT_INFORMATION, w=w_label, metric=rho.kind.value, **common)
            if phi is not None:
                report.add('weighted_poincare', bounds.weighted_poincare(path_system, fixed_w, phi),
                           FormulaTag.WEIGHTED_POINCARE, w=w_label, **common)

        kappa = bounds.kappa_constant(path_system, rho)
        report.add('kappa', kappa, FormulaTag.CHEEGER, metric=rho.kind.value, **common)
        report.extend(self.corollary_service.concentration_constants(model, rho, K, kappa))

        if model.is_laplacian():
            report.extend(self.corollary_service.laplacian_corollary_bounds(model))
            if model.n <= MAX_ORBIT_VERTICES:
                report.extend(self.symmetry_service.symmetry_bounds(model))
        if model.family != 'custom':
            report.extend(self.closed_form_service.closed_forms(model.family, model.params))

        logger.info("Computed %d bound entries for %s", len(report.entries), source)
        return model, report, runs

    def exact(self, source, quantity, metric='graph', nu=None, nu2=None, h=None,
              restarts=None, iterations=None, seed=None, threads=None):
        if quantity not in EXACT_QUANTITIES:
            raise UnknownOptionException(f"Unknown quantity: {quantity}. Allowed: {', '.join(EXACT_QUANTITIES)}")
        model = self.load_model(source)

        if quantity == 'cp':
            spectral = self.spectral_service.spectral_decomposition(model)
            return model, quantity, {
                'spectral': spectral,
                'discrete_window': self.variance_service.discrete_gaussian_window(spectral.cp),
            }
        if quantity == 'w1':
            rho, _ = self.resolve_metric(model, metric)
            first = self._measure(model, nu, '--nu')
            second = self._measure(model, nu2, '--nu2')
            return model, quantity, self.transport_service.wasserstein1(rho, first, second)
        if quantity == 'entropy':
            return model, quantity, self.information_service.entropy_info(model, self._measure(model, nu, '--nu'))
        if quantity == 'cheeger':
            rho, _ = self.resolve_metric(model, metric)
            return model, quantity, self.cheeger_service.cheeger_lower(model, rho)
        if quantity == 'lslower':
            return model, quantity, self.ls_service.ls_lower(model, restarts, iterations, seed, threads)

        rho, _ = self.resolve_metric(model, metric)
        if h is None:
            h = self.spectral_service.spectral_decomposition(model).eigenfunction
            return model, quantity, {
                'value': self.variance_service.asymptotic_variance(model, h),
                'gaussian_lower': self.variance_service.gaussian_lower(model, rho),
            }
        h = self.graph_repository.load_vector(model, h)
        value = self.variance_service.asymptotic_variance(model, h)
        lipschitz = rho.lipschitz_norm(h)
        return model, quantity, {
            'value': value,
            'gaussian_lower': value / lipschitz ** 2 if 0 < lipschitz < np.inf else None,
        }

    def simulate(self, config_source, seed=None, threads=None):
        config = self._experiment_config(config_source)
        model = self.load_model(config['model'])
        g = self.graph_repository.vector(model, config['g'])

        if 'nu' in config:
            nu = ProbabilityVector.of(self.graph_repository.vector(model, config['nu']), n=model.n)
        elif 'start' in config:
            if config['start'] not in model.vertices:
                raise InvalidExperimentException(f"Unknown start vertex {config['start']}")
            nu = ProbabilityVector.of(np.eye(model.n)[model.vertices.index(config['start'])])
        else:
            nu = ProbabilityVector.of(model.mu)

        rho, _ = self.resolve_metric(model, config['metric'])
        if 'cG_upper' in config:
            cG_upper, origin = config['cG_upper'], 'config'
        else:
            paths = self.path_service.path_system(model, PathMode.GEODESIC)
            cG_upper, origin = self.bound_service.K_constant(paths, LengthFunction.uniform(model), rho), 'K'

        if seed is None:
            seed = config.get('seed', settings.INEQ_SEED)
        reports = self.simulation_service.concentration_experiment(
            model, nu, g, config['t'], config['r'], config['trials'], cG_upper, rho,
            seed=seed, max_workers=threads,
        )
        return model, reports, origin, seed

    def _circle_check(self, model, w, paths, ls_value):
        if model.family != 'cycle' or w != 'uniform' or paths != 'geodesic':
            return {}
        reference = self.closed_form_service.circle_ls_upper(model.n)
        exceeds = ls_value > reference + 1e-9
        if exceeds:
            logger.warning("log_sobolev %.10g exceeds the cycle reference %.10g; inspect the antipodal tie-break",
                           ls_value, reference)
        return {'reference_ratio': ls_value / reference, 'exceeds_reference': exceeds}

    def _measure(self, model, source, flag):
        if source is None:
            raise MissingArgumentException(f"{flag} is required for this quantity")
        return ProbabilityVector.of(self.graph_repository.load_vector(model, source), n=model.n)

    def _experiment_config(self, source):
        if isinstance(source, dict):
            document = source
        else:
            try:
                document = json.loads(Path(source).read_text(encoding='utf-8'))
            except OSError as e:
                raise ConfigFileException(f"Cannot read {source}: {e.strerror}")
            except json.JSONDecodeError as e:
                raise ConfigFileException(f"{source} is not valid JSON: {e}")
        serializer = ExperimentConfigSerializer(data=document)
        if not serializer.is_valid():
            raise InvalidExperimentException(f"Invalid experiment config: {serializer.errors}")
        return serializer.validated_data
