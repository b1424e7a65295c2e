from .bound_service import BoundService
from .corollary_service import CorollaryService
from .symmetry_service import SymmetryService
from .closed_form_service import ClosedFormService

__all__ = ['BoundService', 'CorollaryService', 'SymmetryService', 'ClosedFormService']
