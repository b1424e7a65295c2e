from .bound_report_mapper import BoundReportMapper

__all__ = ['BoundReportMapper']
