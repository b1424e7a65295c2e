from .model_mapper import ModelMapper

__all__ = ['ModelMapper']
