import json
from pathlib import Path

from graphs.exceptions import GraphFileException, InvalidPathException
from graphs.serializers import PathFileSerializer


class PathRepository:
    """Loads explicit path systems: {"paths": [{"from", "to", "vertices"}]}."""

    def load(self, model, source):
        try:
            document = json.loads(Path(source).read_text(encoding='utf-8'))
        except OSError as e:
            raise GraphFileException(f"Cannot read {source}: {e.strerror}")
        except json.JSONDecodeError as e:
            raise GraphFileException(f"{source} is not valid JSON: {e}")
        return self.parse(model, document)

    def parse(self, model, document):
        serializer = PathFileSerializer(data=document)
        if not serializer.is_valid():
            raise GraphFileException(f"Invalid path document: {serializer.errors}")

        index = {label: i for i, label in enumerate(model.vertices)}
        paths = {}
        for entry in serializer.validated_data['paths']:
            labels = [entry['from'], entry['to'], *entry['vertices']]
            missing = [label for label in labels if label not in index]
            if missing:
                raise InvalidPathException(f"Unknown vertices in path: {', '.join(missing)}")
            key = (index[entry['from']], index[entry['to']])
            if key in paths:
                raise InvalidPathException(f"Duplicate path from {entry['from']} to {entry['to']}")
            paths[key] = tuple(index[label] for label in entry['vertices'])
        return paths
