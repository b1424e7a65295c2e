import numpy as np
from django.test import SimpleTestCase, override_settings

from graphs.services import GalleryService, MetricService
from graphs.tests.factories import random_model, random_probability
from oracles.exceptions import InvalidMeasureException
from oracles.services import TransportService


class TransportServiceTest(SimpleTestCase):

    def setUp(self):
        self.gallery = GalleryService()
        self.metric_service = MetricService()
        self.service = TransportService()

    def test_point_mass_to_uniform_on_cycle(self):
        model = self.gallery.gallery('cycle', [4])
        result = self.service.wasserstein1(self.metric_service.graph_metric(model), [1.0, 0, 0, 0], model.mu)

        self.assertAlmostEqual(result.value, 1.0, delta=1e-12)
        np.testing.assert_allclose(result.plan.matrix.sum(axis=1), [1.0, 0, 0, 0], atol=1e-9)
        np.testing.assert_allclose(result.plan.matrix.sum(axis=0), model.mu, atol=1e-9)

    def test_equal_measures(self):
        model = self.gallery.gallery('star', [3])
        self.assertEqual(self.service.wasserstein1(self.metric_service.graph_metric(model), model.mu, model.mu).value, 0.0)

    def test_random_instances(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            model = random_model(rng)
            rho = self.metric_service.all_pairs_distance(model)
            discrete = self.metric_service.discrete_metric(model)
            nu1 = random_probability(rng, model.n)
            nu2 = random_probability(rng, model.n)

            result = self.service.wasserstein1(rho, nu1, nu2)
            self.assertLess(result.gap, 1e-8)
            self.assertLessEqual(rho.lipschitz_norm(result.witness), 1 + 1e-9)
            self.assertAlmostEqual(self.service.wasserstein1(rho, nu2, nu1).value, result.value, delta=1e-9)

            nu3 = random_probability(rng, model.n)
            self.assertLessEqual(
                result.value,
                self.service.wasserstein1(rho, nu1, nu3).value + self.service.wasserstein1(rho, nu3, nu2).value + 1e-8,
            )
            self.assertAlmostEqual(
                self.service.wasserstein1(discrete, nu1, nu2).value,
                0.5 * np.abs(nu1 - nu2).sum(),
                delta=1e-12,
            )

    def test_invalid_measures(self):
        rho = self.metric_service.graph_metric(self.gallery.gallery('path', [3]))
        with self.assertRaises(InvalidMeasureException):
            self.service.wasserstein1(rho, [0.5, 0.5], [0.2, 0.3, 0.5])
        with self.assertRaises(InvalidMeasureException):
            self.service.wasserstein1(rho, [0.5, 0.6, -0.1], [0.2, 0.3, 0.5])
        with self.assertRaises(InvalidMeasureException):
            self.service.wasserstein1(rho, [0.5, 0.6, 0.1], [0.2, 0.3, 0.5])

    @override_settings(INEQ_TRANSPORT_MAX_PIVOTS=7)
    def test_pivot_limit_comes_from_settings(self):
        self.assertEqual(TransportService().max_pivots, 7)
