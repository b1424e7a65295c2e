from .trace_repository import TraceRepository

__all__ = ['TraceRepository']
