import math
from dataclasses import dataclass, field
from enum import Enum


class FormulaTag(str, Enum):
    POINCARE_CONDUCTANCE = 'poincare_conductance_length'
    POINCARE_LENGTH = 'poincare_length_function'
    LOG_SOBOLEV = 'log_sobolev_path'
    WEIGHTED_POINCARE = 'weighted_poincare'
    TRANSPORT_INFORMATION = 'transport_information'
    CHEEGER = 'generalized_cheeger'
    JUMP_MOMENT = 'jump_second_moment'
    TRANSPORT_ENTROPY = 'transport_entropy'
    CHEEGER_GAUSSIAN = 'cheeger_gaussian'
    GAUSSIAN_BEST = 'gaussian_best'
    LAPLACIAN_TRANSPORT = 'laplacian_transport_information'
    LAPLACIAN_CHEEGER = 'laplacian_cheeger'
    EDGE_TRANSITIVE = 'edge_transitive'
    VERTEX_TRANSITIVE = 'vertex_transitive'
    DISTANCE_TRANSITIVE = 'distance_transitive'
    JOHNSON = 'johnson_binomial'
    INDEX = 'automorphism_index'
    REFERENCE = 'reference'


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: float
    formula: FormulaTag
    inputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"Bound {self.name} must be finite and nonnegative, got {self.value}")


@dataclass
class BoundReport:
    entries: list = field(default_factory=list)

    def add(self, name, value, formula, **inputs):
        entry = BoundEntry(name=name, value=float(value), formula=FormulaTag(formula), inputs=inputs)
        self.entries.append(entry)
        return entry

    def extend(self, other):
        self.entries.extend(other.entries)
        return self

    def get(self, name):
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def value(self, name):
        return self.get(name).value

    def names(self):
        return [entry.name for entry in self.entries]


@dataclass(frozen=True)
class EdgeOrbits:
    """Automorphism orbits of non-oriented edges (as undirected edge indices) and vertices."""

    edge_orbits: tuple
    vertex_orbits: tuple
    index: float
    edge_transitive: bool
    vertex_transitive: bool
    distance_transitive: bool


@dataclass(frozen=True)
class MgfCheck:
    passed: bool
    worst_ratio: float
    lipschitz: float


@dataclass(frozen=True)
class IsoperimetryCheck:
    """Worst ratios of the two set forms of the L1 inequality (<= 1 means it holds)."""

    symmetric_ratio: float
    cheeger_ratio: float
    worst_subset: tuple
