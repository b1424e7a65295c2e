class SimulationException(Exception):
    input_error = True


class InvalidExperimentException(SimulationException):
    pass
