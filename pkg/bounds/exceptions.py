class BoundsException(Exception):
    input_error = True


class NegativePhiException(BoundsException):
    pass


class NotLaplacianException(BoundsException):
    pass


class NotUniformException(BoundsException):
    pass


class TooLargeException(BoundsException):
    pass


class InconsistentBoundException(BoundsException):
    input_error = False


class UnknownSymmetryException(BoundsException):
    pass
