import math

import numpy as np
from django.test import SimpleTestCase

from bounds.services import BoundService, CorollaryService
from graphs.models import LengthFunction, PathMode
from graphs.services import MetricService, PathService
from graphs.tests.factories import random_model
from oracles.models import ProbabilityVector
from oracles.services import FunctionalService, InformationService, TransportService

MODELS = 20
TRIALS = 200
SLACK = 1e-9


class InequalitySuiteTest(SimpleTestCase):
    """Functional inequalities implied by the path-method constants, on random reversible models."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.metric_service = MetricService()
        cls.path_service = PathService(cls.metric_service)
        cls.bound_service = BoundService(cls.path_service)
        cls.corollary_service = CorollaryService(cls.metric_service)
        cls.functional = FunctionalService()
        cls.information = InformationService(cls.functional)
        cls.transport = TransportService()

    def assertBounded(self, lhs, rhs, label):
        self.assertLessEqual(lhs, rhs + SLACK * max(1.0, abs(rhs)), msg=f"{label}: {lhs} > {rhs}")

    def test_inequality_suite(self):
        rng = np.random.default_rng(20240601)
        for _ in range(MODELS):
            model = random_model(rng)
            paths = self.path_service.path_system(model, PathMode.GEODESIC)
            w = LengthFunction(rng.uniform(0.5, 2.0, size=len(model.undirected_edges)))
            traversal = self.path_service.traversal(paths, w)
            rho = self.metric_service.graph_metric(model)

            poincare = self.bound_service.poincare_profile(paths, w, traversal).max()
            log_sobolev = self.bound_service.ls_profile(paths, w, traversal).max()
            K = self.bound_service.K_profile(paths, w, rho, traversal).max()
            kappa = self.bound_service.kappa_constant(paths, rho)
            doubled = self.metric_service.weighted_discrete_metric(model, np.ones(model.n))
            kappa_doubled = self.bound_service.kappa_constant(paths, doubled)
            te = self.corollary_service.concentration_constants(model, rho, K).value('transport_entropy')

            check = self.corollary_service.cheeger_check(model, kappa_doubled)
            self.assertBounded(check.symmetric_ratio, 1.0, 'set isoperimetry')
            self.assertBounded(check.cheeger_ratio, 1.0, 'standard Cheeger')

            for _ in range(TRIALS):
                f = rng.normal(size=model.n)
                energy = self.functional.dirichlet(model, f)
                gradient_mass = self.functional.gradient_mass(model, f)
                phi = rng.uniform(0.0, 2.0, size=model.n)
                centered = f - model.mu @ f

                self.assertBounded(self.functional.variance(model, f), poincare * energy, 'Poincare')

                weighted = self.bound_service.weighted_poincare_profile(paths, w, phi, traversal).max()
                self.assertBounded(float(model.mu @ (centered ** 2 * phi)), weighted * energy, 'weighted Poincare')

                self.assertBounded(self.functional.entropy_of_square(model, f), 2 * log_sobolev * energy, 'log-Sobolev')

                phi_metric = self.metric_service.weighted_discrete_metric(model, phi)
                kappa_phi = self.bound_service.kappa_constant(paths, phi_metric)
                self.assertBounded(float(model.mu @ (np.abs(centered) * phi)), kappa_phi / 2 * gradient_mass, 'L1 Poincare')

                median = self.functional.median(model, f)
                self.assertBounded(float(model.mu @ np.abs(f - median)), kappa_doubled / 2 * gradient_mass, 'median')

                density = rng.uniform(0.01, 3.0, size=model.n)
                density = density / (model.mu @ density)
                transported = self.transport.wasserstein1(rho, density * model.mu, model.mu).value
                self.assertBounded(
                    transported, kappa / 2 * self.functional.gradient_mass(model, density), 'Cheeger transport'
                )

                nu = ProbabilityVector.of(self._measure(rng, model.n), n=model.n)
                info = self.information.entropy_info(model, nu)
                distance = self.transport.wasserstein1(rho, nu, model.mu).value
                self.assertBounded(distance ** 2, 2 * K * info.I, 'transport-information')
                self.assertBounded(distance ** 2, te * info.H, 'transport-entropy')

                a = rng.normal()
                shifted = f - a
                self.assertBounded(
                    self.functional.entropy_of_square(model, f),
                    self.functional.entropy_of_square(model, shifted) + 2 * float(model.mu @ shifted ** 2),
                    'entropy shift',
                )

                potential = rng.normal(size=model.n)
                square = f ** 2
                variational = float(model.mu @ (square * potential)) - float(model.mu @ square) * math.log(
                    float(model.mu @ np.exp(potential))
                )
                self.assertBounded(variational, self.functional.entropy_of_square(model, f), 'entropy duality')

    def _measure(self, rng, n):
        if rng.random() < 0.1:
            return np.eye(n)[rng.integers(n)]
        return rng.dirichlet(np.ones(n))
