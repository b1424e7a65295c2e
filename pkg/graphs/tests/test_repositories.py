import json
import tempfile
from pathlib import Path

import numpy as np
from django.test import SimpleTestCase

from graphs.exceptions import GraphFileException, InvalidPathException
from graphs.repositories import GraphRepository, PathRepository
from graphs.services import GalleryService


class GraphRepositoryTest(SimpleTestCase):

    def setUp(self):
        self.repository = GraphRepository()
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, name, document):
        path = Path(self.directory.name) / name
        path.write_text(json.dumps(document), encoding='utf-8')
        return str(path)

    def test_gallery_uri(self):
        model = self.repository.load('gallery:complete:4')
        self.assertEqual(model.n, 4)
        self.assertEqual(self.repository.parse_gallery_uri('gallery:johnson,5,2'), ('johnson', ('5', '2')))

    def test_rate_file(self):
        source = self.write('graph.json', {
            'vertices': ['a', 'b', 'c'],
            'edges': [
                {'u': 'a', 'v': 'b', 'q_uv': 2.0, 'q_vu': 1.0},
                {'u': 'b', 'v': 'c', 'q_uv': 1.0, 'q_vu': 1.0},
            ],
        })
        model = self.repository.load(source)

        np.testing.assert_allclose(model.mu, [0.2, 0.4, 0.4])
        self.assertEqual(len(self.repository.fingerprint(source)), 64)

    def test_laplacian_file(self):
        source = self.write('graph.json', {
            'vertices': ['a', 'b', 'c'],
            'edges': [{'u': 'a', 'v': 'b'}, {'u': 'b', 'v': 'c'}],
            'laplacian': True,
        })
        self.assertTrue(self.repository.load(source).is_laplacian())

    def test_missing_rates_and_unknown_vertices(self):
        with self.assertRaises(GraphFileException):
            self.repository.parse({'vertices': ['a', 'b'], 'edges': [{'u': 'a', 'v': 'b'}]})
        with self.assertRaises(GraphFileException):
            self.repository.parse({'vertices': ['a'], 'edges': [{'u': 'a', 'v': 'z', 'q_uv': 1, 'q_vu': 1}]})

    def test_missing_file(self):
        with self.assertRaises(GraphFileException):
            self.repository.load(str(Path(self.directory.name) / 'absent.json'))

    def test_vectors(self):
        model = GalleryService().gallery('star', [2])

        np.testing.assert_allclose(self.repository.load_vector(model, '[1, 2, 3]'), [1, 2, 3])
        keyed = self.repository.load_vector(model, '{"v2": 3, "v0": 1, "v1": 2}')
        np.testing.assert_allclose(keyed, [1, 2, 3])
        from_file = self.repository.load_vector(model, self.write('phi.json', [0.5, 0.5, 0.0]))
        np.testing.assert_allclose(from_file, [0.5, 0.5, 0.0])

        with self.assertRaises(GraphFileException):
            self.repository.load_vector(model, '[1, 2]')
        with self.assertRaises(GraphFileException):
            self.repository.load_vector(model, '{"v0": 1, "x": 2, "v1": 3}')
        with self.assertRaises(GraphFileException):
            self.repository.load_vector(model, '[1, "two", 3]')

    def test_length_function_file(self):
        model = GalleryService().gallery('path', [3])
        source = self.write('w.json', {'weights': [{'u': '1', 'v': '0', 'w': 2.0}, {'u': '1', 'v': '2', 'w': 3.0}]})
        np.testing.assert_allclose(self.repository.load_length_function(model, source).values, [2.0, 3.0])

        partial = self.write('partial.json', {'weights': [{'u': '0', 'v': '1', 'w': 2.0}]})
        with self.assertRaises(GraphFileException):
            self.repository.load_length_function(model, partial)


class PathRepositoryTest(SimpleTestCase):

    def test_parse_paths(self):
        model = GalleryService().gallery('path', [2])
        paths = PathRepository().parse(model, {'paths': [
            {'from': '0', 'to': '1', 'vertices': ['0', '1']},
            {'from': '1', 'to': '0', 'vertices': ['1', '0']},
        ]})
        self.assertEqual(paths, {(0, 1): (0, 1), (1, 0): (1, 0)})

    def test_unknown_vertex(self):
        model = GalleryService().gallery('path', [2])
        with self.assertRaises(InvalidPathException):
            PathRepository().parse(model, {'paths': [{'from': '0', 'to': '9', 'vertices': ['0', '9']}]})
