from .concentration_report_mapper import ConcentrationReportMapper

__all__ = ['ConcentrationReportMapper']
