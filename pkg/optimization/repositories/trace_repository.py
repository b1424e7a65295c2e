import csv
from pathlib import Path

from optimization.exceptions import TraceFileException


class TraceRepository:
    """Writes an optimization trace as CSV with columns iteration, value."""

    def save(self, result, destination):
        try:
            with Path(destination).open('w', newline='', encoding='utf-8') as handle:
                writer = csv.writer(handle)
                writer.writerow(['iteration', 'value'])
                for iteration, value in enumerate(result.trace):
                    writer.writerow([iteration, repr(float(value))])
        except OSError as e:
            raise TraceFileException(f"Cannot write trace to {destination}: {e.strerror}")
        return destination

    def load(self, source):
        try:
            with Path(source).open(newline='', encoding='utf-8') as handle:
                return [(int(row['iteration']), float(row['value'])) for row in csv.DictReader(handle)]
        except (OSError, KeyError, ValueError) as e:
            raise TraceFileException(f"Cannot read trace {source}: {e}")
