from cli.services.manifest_service import ManifestService
from cli.services.report_service import ReportService

__all__ = ['ManifestService', 'ReportService']
