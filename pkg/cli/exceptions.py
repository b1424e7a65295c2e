class CliException(Exception):
    input_error = True


class MissingArgumentException(CliException):
    pass


class UnknownOptionException(CliException):
    pass


class ConfigFileException(CliException):
    pass
