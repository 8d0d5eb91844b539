class HopflabError(Exception):
    def __init__(self, message, errors=None):

        # Call the base class constructor with the parameters it needs
        super().__init__(message)

        # Offending values, when the caller wants them for a report
        self.errors = errors


class InvalidGroup(HopflabError):
    pass


class InvalidElement(HopflabError):
    pass


class InfiniteQuotient(HopflabError):
    pass


class BoundExceeded(HopflabError):
    def __init__(self, message, bound=None, errors=None):
        super().__init__(message, errors)
        self.bound = bound


class PreconditionViolated(HopflabError):
    pass


class ConstructionError(HopflabError):
    pass


class ParseError(HopflabError):
    def __init__(self, message, position: int = 0, errors=None):
        super().__init__(f'{message} (at position {position})', errors)
        self.position = position


class DescriptorError(HopflabError):
    pass


class ClassificationError(HopflabError):
    pass


class UnknownSuite(HopflabError):
    pass


class ConfigError(HopflabError):
    pass
