from oracles.services.cheeger_service import CheegerService
from oracles.services.functional_service import FunctionalService
from oracles.services.information_service import InformationService
from oracles.services.ls_service import LsService
from oracles.services.spectral_service import SpectralService
from oracles.services.transport_service import TransportService
from oracles.services.variance_service import VarianceService

__all__ = [
    'CheegerService',
    'FunctionalService',
    'InformationService',
    'LsService',
    'SpectralService',
    'TransportService',
    'VarianceService',
]
