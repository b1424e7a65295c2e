class BoundReportMapper:

    @staticmethod
    def to_dict(report):
        return {
            'entries': [
                BoundReportMapper._map_entry(entry)
                for entry in report.entries
            ]
        }

    @staticmethod
    def _map_entry(entry):
        return {
            'name': entry.name,
            'value': entry.value,
            'formula': entry.formula.value,
            'inputs': dict(entry.inputs),
        }
