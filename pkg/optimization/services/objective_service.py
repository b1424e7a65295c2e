import numpy as np

from bounds.services import BoundService
from optimization.exceptions import BadObjectiveException
from optimization.models import Objective, ObjectiveKind


class ObjectiveService:

    def __init__(self, bound_service=None):
        self.bound_service = bound_service or BoundService()

    def objective(self, paths, kind, rho=None, phi=None):
        try:
            kind = ObjectiveKind(kind)
        except ValueError:
            allowed = ', '.join(k.value for k in ObjectiveKind)
            raise BadObjectiveException(f"Unknown objective: {kind}. Allowed objectives: {allowed}")

        bounds = self.bound_service
        if kind is ObjectiveKind.LS_BOUND:
            return Objective(kind, lambda w: bounds.ls_profile(paths, w))
        if kind is ObjectiveKind.POINCARE:
            return Objective(kind, lambda w: bounds.poincare_profile(paths, w))
        if kind is ObjectiveKind.K_CONSTANT:
            if rho is None:
                raise BadObjectiveException("K_constant needs a metric")
            return Objective(kind, lambda w: bounds.K_profile(paths, w, rho), {'metric': rho.kind.value})

        if phi is None:
            raise BadObjectiveException("weighted_poincare needs phi")
        phi = np.asarray(phi, dtype=float)
        if phi.shape != (paths.model.n,):
            raise BadObjectiveException(f"phi has shape {phi.shape}, expected ({paths.model.n},)")
        return Objective(kind, lambda w: bounds.weighted_poincare_profile(paths, w, phi))
