from .model_service import ModelService
from .gallery_service import GalleryService
from .metric_service import MetricService
from .path_service import PathService

__all__ = ['ModelService', 'GalleryService', 'MetricService', 'PathService']
