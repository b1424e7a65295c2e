import hashlib
import json
from pathlib import Path

import numpy as np

from graphs.exceptions import GraphFileException
from graphs.models import LengthFunction, RateGraph, _frozen
from graphs.serializers import GraphFileSerializer, LengthFunctionSerializer, VectorSerializer
from graphs.services.gallery_service import GalleryService
from graphs.services.model_service import ModelService


class GraphRepository:
    """Loads models from `gallery:NAME:PARAMS` URIs or graph JSON files."""

    GALLERY_PREFIX = 'gallery:'

    def __init__(self, gallery_service=None, model_service=None):
        self.model_service = model_service or ModelService()
        self.gallery_service = gallery_service or GalleryService(self.model_service)

    def load(self, source):
        if source.startswith(self.GALLERY_PREFIX):
            family, params = self.parse_gallery_uri(source)
            return self.gallery_service.gallery(family, params)
        return self.parse(self._read_json(source))

    def parse_gallery_uri(self, source):
        parts = source[len(self.GALLERY_PREFIX):].replace(',', ':').split(':')
        return parts[0], tuple(p for p in parts[1:] if p)

    def parse(self, document):
        serializer = GraphFileSerializer(data=document)
        if not serializer.is_valid():
            raise GraphFileException(f"Invalid graph document: {serializer.errors}")
        data = serializer.validated_data

        if data['laplacian']:
            pairs = [(e['u'], e['v']) for e in data['edges']]
            return self.model_service.laplacian_model(data['vertices'], pairs)

        edges = []
        for e in data['edges']:
            edges.append((e['u'], e['v'], e['q_uv']))
            edges.append((e['v'], e['u'], e['q_vu']))
        return self.model_service.build_model(RateGraph.from_labels(data['vertices'], edges))

    def fingerprint(self, source):
        if source.startswith(self.GALLERY_PREFIX):
            payload = source.encode('utf-8')
        else:
            payload = self._read_bytes(source)
        return hashlib.sha256(payload).hexdigest()

    def load_vector(self, model, source):
        """Vector over vertices from a file path or an inline JSON list/object."""
        text = source.strip()
        document = self._parse_inline(text) if text[:1] in ('[', '{') else self._read_json(source)
        return self.vector(model, document)

    def vector(self, model, document):
        """Vector over vertices from an already parsed list or label-keyed object."""
        serializer = VectorSerializer(data={'values': document})
        if not serializer.is_valid():
            raise GraphFileException(f"Invalid vector: {serializer.errors}")
        values = serializer.validated_data['values']

        if isinstance(values, dict):
            unknown = set(values) - set(model.vertices)
            if unknown or len(values) != model.n:
                raise GraphFileException(
                    f"Vector keys must be exactly the {model.n} vertex labels"
                )
            return np.array([float(values[v]) for v in model.vertices])
        if len(values) != model.n:
            raise GraphFileException(f"Vector has {len(values)} entries, model has {model.n} vertices")
        return np.array(values, dtype=float)

    def load_length_function(self, model, source):
        serializer = LengthFunctionSerializer(data=self._read_json(source))
        if not serializer.is_valid():
            raise GraphFileException(f"Invalid length function: {serializer.errors}")

        index = {label: i for i, label in enumerate(model.vertices)}
        lookup = {(int(u), int(v)): k for k, (u, v) in enumerate(model.undirected_edges)}
        values = np.full(len(lookup), np.nan)
        for entry in serializer.validated_data['weights']:
            if entry['u'] not in index or entry['v'] not in index:
                raise GraphFileException(f"Unknown vertex in edge ({entry['u']}, {entry['v']})")
            a, b = sorted((index[entry['u']], index[entry['v']]))
            if (a, b) not in lookup:
                raise GraphFileException(f"({entry['u']}, {entry['v']}) is not an edge")
            values[lookup[(a, b)]] = entry['w']
        if np.any(np.isnan(values)):
            raise GraphFileException("Length function must give every edge a length")
        return LengthFunction(_frozen(values))

    def _read_bytes(self, source):
        try:
            return Path(source).read_bytes()
        except OSError as e:
            raise GraphFileException(f"Cannot read {source}: {e.strerror}")

    def _read_json(self, source):
        try:
            return json.loads(self._read_bytes(source).decode('utf-8'))
        except (UnicodeDecodeError, json.JSONDecodeError) as e:
            raise GraphFileException(f"{source} is not valid UTF-8 JSON: {e}")

    def _parse_inline(self, text):
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphFileException(f"Inline vector is not valid JSON: {e}")
