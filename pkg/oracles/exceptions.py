class OracleException(Exception):
    input_error = False


class DegenerateSpectrumException(OracleException):
    pass


class NonConvergenceException(OracleException):
    pass


class SingularSystemException(OracleException):
    pass


class InvalidMeasureException(OracleException):
    input_error = True


class TooLargeException(OracleException):
    input_error = True


class InvalidParameterException(OracleException):
    input_error = True
