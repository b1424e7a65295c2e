from django.test import SimpleTestCase

from graphs.services import GalleryService, MetricService
from oracles.mappers import OracleResultMapper
from oracles.services import CheegerService, SpectralService, TransportService


class OracleResultMapperTest(SimpleTestCase):

    def setUp(self):
        self.model = GalleryService().gallery('path', [3])
        self.rho = MetricService().graph_metric(self.model)

    def test_spectral(self):
        data = OracleResultMapper.spectral(self.model, SpectralService().spectral_decomposition(self.model))

        self.assertEqual(data['quantity'], 'cp')
        self.assertEqual(list(data['eigenfunction']), list(self.model.vertices))
        self.assertEqual(len(data['eigenvalues']), 3)

    def test_transport_lists_positive_plan_entries(self):
        result = TransportService().wasserstein1(self.rho, [1.0, 0.0, 0.0], [0.0, 0.0, 1.0])
        data = OracleResultMapper.transport(self.model, result)

        self.assertAlmostEqual(data['value'], 2.0)
        self.assertEqual(len(data['plan']), 1)
        self.assertEqual(data['plan'][0]['from'], self.model.vertices[0])
        self.assertEqual(data['plan'][0]['to'], self.model.vertices[2])

    def test_cheeger_is_labelled_lower(self):
        data = OracleResultMapper.cheeger(self.model, CheegerService().cheeger_lower(self.model, self.rho))
        self.assertEqual(data['bound'], 'lower')
        self.assertTrue(data['subset'])

    def test_variance_without_gaussian_lower(self):
        self.assertEqual(OracleResultMapper.variance(1.5), {'quantity': 'avar', 'value': 1.5})
