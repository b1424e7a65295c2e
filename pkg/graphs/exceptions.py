class GraphException(Exception):
    input_error = True


class InvalidGraphException(GraphException):
    pass


class NotConnectedException(GraphException):
    pass


class NotReversibleException(GraphException):
    pass


class NonpositiveRateException(GraphException):
    pass


class BadParamsException(GraphException):
    pass


class GraphFileException(GraphException):
    pass


class PathException(GraphException):
    pass


class InvalidPathException(PathException):
    pass


class NotATreeException(PathException):
    pass


class TooManyPathsException(PathException):
    input_error = False
