class ConcentrationReportMapper:

    @staticmethod
    def to_dict(reports):
        return {
            'reports': [ConcentrationReportMapper._map_report(report) for report in reports],
            'all_passed': all(report.passed for report in reports),
        }

    @staticmethod
    def _map_report(report):
        return {
            't': report.t,
            'r': report.r,
            'trials': report.trials,
            'frequency': report.frequency,
            'bound': report.bound,
            'l2_norm': report.l2_norm,
            'lipschitz': report.lipschitz,
            'cG_upper': report.cG_upper,
            'standard_error': report.standard_error,
            'pass': report.passed,
        }
