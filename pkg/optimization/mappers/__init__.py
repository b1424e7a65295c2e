from .optimization_result_mapper import OptimizationResultMapper

__all__ = ['OptimizationResultMapper']
