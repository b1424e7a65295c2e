class OptimizationException(Exception):
    input_error = True


class BadObjectiveException(OptimizationException):
    pass


class TraceFileException(OptimizationException):
    pass
