from dataclasses import dataclass, field


@dataclass(frozen=True)
class RunManifest:
    command: str
    inputs: dict
    seed: int
    version: str
    timestamp: str
    outputs: tuple = field(default=())
    options: dict = field(default_factory=dict)
