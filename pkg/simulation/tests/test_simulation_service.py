import math

import numpy as np
from django.test import SimpleTestCase

from graphs.services import GalleryService, MetricService
from oracles.models import ProbabilityVector
from oracles.services import SpectralService, VarianceService
from simulation.exceptions import InvalidExperimentException
from simulation.mappers import ConcentrationReportMapper
from simulation.models import Trajectory
from simulation.serializers import ExperimentConfigSerializer
from simulation.services import SimulationService, trial_generator


class TrajectoryTest(SimpleTestCase):

    def test_time_integral_is_exact(self):
        trajectory = Trajectory(initial=0, jump_times=(1.0, 2.5), vertices=(1, 0), horizon=4.0)

        self.assertEqual(trajectory.jump_count, 2)
        self.assertAlmostEqual(trajectory.time_integral([2.0, 5.0]), 12.5)
        np.testing.assert_allclose(trajectory.occupation(2), [2.5, 1.5])


class SimulationServiceTest(SimpleTestCase):

    def setUp(self):
        self.gallery = GalleryService()
        self.metric_service = MetricService()
        self.service = SimulationService()

    def test_zero_horizon(self):
        trajectory = self.service.simulate(self.gallery.gallery('cycle', [5]), 2, 0.0, seed=1)

        self.assertEqual(trajectory.jump_count, 0)
        self.assertEqual(trajectory.initial, 2)
        self.assertEqual(trajectory.holding(), [(2, 0.0)])

    def test_invalid_horizon_and_start(self):
        model = self.gallery.gallery('cycle', [5])
        with self.assertRaises(InvalidExperimentException):
            self.service.simulate(model, 0, -1.0)
        with self.assertRaises(InvalidExperimentException):
            self.service.simulate(model, 7, 1.0)

    def test_jumps_follow_edges(self):
        model = self.gallery.gallery('path', [6])
        trajectory = self.service.simulate(model, 0, 200.0, seed=4)
        states = (trajectory.initial,) + trajectory.vertices

        self.assertTrue(all(abs(a - b) == 1 for a, b in zip(states, states[1:])))
        self.assertTrue(all(0 < t < 200.0 for t in trajectory.jump_times))
        self.assertEqual(list(trajectory.jump_times), sorted(trajectory.jump_times))

    def test_seeded_runs_agree(self):
        model = self.gallery.gallery('star', [4])
        first = self.service.simulate(model, 0, 30.0, seed=12)
        second = self.service.simulate(model, 0, 30.0, rng=trial_generator(12, 0))

        self.assertEqual(first.jump_times, second.jump_times)
        self.assertEqual(first.vertices, second.vertices)

    def test_two_point_occupation(self):
        model = self.gallery.gallery('path', [2])
        fractions = self.service.time_averages(model, 0, 400.0, 200, seed=3)

        self.assertEqual(fractions.shape, (200, 2))
        np.testing.assert_allclose(fractions.sum(axis=1), 1.0)
        self.assertAlmostEqual(fractions[:, 0].mean(), 0.5, delta=0.02)

    def test_ergodic_mean_on_complete_graph(self):
        model = self.gallery.gallery('complete', [3])
        g = np.array([1.0, -1.0, 0.0])
        averages = self.service.time_averages(model, ProbabilityVector.of(model.mu), 50.0, 2000, seed=8) @ g
        standard_error = averages.std(ddof=1) / math.sqrt(len(averages))

        self.assertLessEqual(abs(averages.mean() - model.mu @ g), 3 * standard_error)

    def test_long_run_variance_matches_asymptotic_variance(self):
        model = self.gallery.gallery('complete', [3])
        spectral = SpectralService()
        h = spectral.spectral_decomposition(model).eigenfunction
        t = 200.0
        averages = self.service.time_averages(model, ProbabilityVector.of(model.mu), t, 1000, seed=21) @ h
        sigma2 = VarianceService(spectral).asymptotic_variance(model, h)

        empirical = t * averages.var(ddof=1)
        self.assertGreater(empirical, sigma2 / 2)
        self.assertLess(empirical, 2 * sigma2)


class ConcentrationExperimentTest(SimpleTestCase):

    def setUp(self):
        self.gallery = GalleryService()
        self.metric_service = MetricService()
        self.service = SimulationService()

    def test_complete_graph_tail_below_bound(self):
        model = self.gallery.gallery('complete', [3])
        rho = self.metric_service.graph_metric(model)
        reports = self.service.concentration_experiment(
            model, model.mu, [1.0, -1.0, 0.0], 50.0, [0.1, 0.2, 0.4], 10000, 2 / 3, rho, seed=2024,
        )

        self.assertEqual([r.r for r in reports], [0.1, 0.2, 0.4])
        for report in reports:
            self.assertAlmostEqual(report.l2_norm, 1.0)
            self.assertEqual(report.lipschitz, 2.0)
            self.assertAlmostEqual(report.bound, math.exp(-50 * report.r ** 2 / (2 * 2 / 3 * 4)))
            self.assertTrue(report.passed)
        self.assertTrue(ConcentrationReportMapper.to_dict(reports)['all_passed'])

    def test_vacuous_bound_passes(self):
        model = self.gallery.gallery('star', [3])
        nu = np.zeros(model.n)
        nu[1] = 1.0
        rho = self.metric_service.graph_metric(model)
        report = self.service.concentration_experiment(
            model, nu, [0.0, 1.0, 0.0, 0.0], 1.0, [0.01], 1000, 1.0, rho, seed=0,
        )[0]

        self.assertAlmostEqual(report.l2_norm, math.sqrt(6))
        self.assertGreater(report.bound, 1.0)
        self.assertTrue(report.passed)

    def test_constant_observable(self):
        model = self.gallery.gallery('cycle', [4])
        report = self.service.concentration_experiment(
            model, model.mu, np.full(model.n, 2.0), 5.0, [0.1], 1000, 1.0,
            self.metric_service.graph_metric(model), seed=0,
        )[0]
        self.assertEqual((report.bound, report.frequency), (0.0, 0.0))
        self.assertTrue(report.passed)

    def test_seed_determines_the_report(self):
        model = self.gallery.gallery('cycle', [5])
        rho = self.metric_service.graph_metric(model)
        g = np.arange(model.n, dtype=float)
        args = (model, model.mu, g, 3.0, [0.5], 1000, 4.0, rho)

        first = self.service.concentration_experiment(*args, seed=9, max_workers=1)
        second = self.service.concentration_experiment(*args, seed=9, max_workers=4)
        self.assertEqual(first, second)

    def test_invalid_inputs(self):
        model = self.gallery.gallery('cycle', [4])
        rho = self.metric_service.graph_metric(model)
        with self.assertRaises(InvalidExperimentException):
            self.service.concentration_experiment(model, model.mu, [1.0, 2.0], 1.0, [0.1], 1000, 1.0, rho)
        with self.assertRaises(InvalidExperimentException):
            self.service.concentration_experiment(model, model.mu, np.ones(4), 1.0, [0.1], 0, 1.0, rho)
        with self.assertRaises(InvalidExperimentException):
            self.service.concentration_experiment(model, model.mu, np.ones(4), 1.0, [0.1, 0.0], 1000, 1.0, rho)


class ExperimentConfigSerializerTest(SimpleTestCase):

    def config(self, **overrides):
        document = {'model': 'gallery:complete:3', 'g': [1, -1, 0], 't': 50, 'r': [0.1], 'trials': 1000}
        document.update(overrides)
        return ExperimentConfigSerializer(data=document)

    def test_valid_config_defaults_to_graph_metric(self):
        serializer = self.config()
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['metric'], 'graph')

    def test_invalid_configs(self):
        self.assertFalse(self.config(trials=0).is_valid())
        self.assertFalse(self.config(t=0).is_valid())
        self.assertFalse(self.config(r=[]).is_valid())
        self.assertFalse(self.config(r=[0.1, 0]).is_valid())
        self.assertFalse(self.config(nu=[1, 0, 0], start='0').is_valid())
        self.assertFalse(self.config(metric='wdist').is_valid())
