from .graph_repository import GraphRepository
from .path_repository import PathRepository

__all__ = ['GraphRepository', 'PathRepository']
