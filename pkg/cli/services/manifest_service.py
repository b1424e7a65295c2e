import hashlib
from pathlib import Path

from django.conf import settings
from django.utils import timezone

from cli.models import RunManifest
from graphs.repositories import GraphRepository


class ManifestService:

    def __init__(self, graph_repository=None):
        self.graph_repository = graph_repository or GraphRepository()

    def manifest(self, command, model_source=None, files=None, seed=None, outputs=(), options=None):
        inputs = {}
        if model_source is not None:
            inputs['model'] = {'source': model_source, 'sha256': self.graph_repository.fingerprint(model_source)}
        for name, source in (files or {}).items():
            inputs[name] = {'source': source, 'sha256': self._file_hash(source)}
        return RunManifest(
            command=command,
            inputs=inputs,
            seed=settings.INEQ_SEED if seed is None else seed,
            version=settings.INEQ_VERSION,
            timestamp=timezone.now().isoformat(),
            outputs=tuple(outputs),
            options=dict(options or {}),
        )

    def _file_hash(self, source):
        path = Path(source)
        if path.is_file():
            return hashlib.sha256(path.read_bytes()).hexdigest()
        return hashlib.sha256(source.encode('utf-8')).hexdigest()
