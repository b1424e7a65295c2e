from .oracle_result_mapper import OracleResultMapper

__all__ = ['OracleResultMapper']
