from .manifest_mapper import ManifestMapper

__all__ = ['ManifestMapper']
