from optimization.services.objective_service import ObjectiveService
from optimization.services.optimize_service import OptimizeService

__all__ = ['ObjectiveService', 'OptimizeService']
