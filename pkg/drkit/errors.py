class ParameterLimitError(ValueError):
    """
    Raised when the parameters required for a construction exceed the
    configured family-size or dimension limits.
    """

    def __init__(self, message, **values):
        super().__init__(message)
        self.values = values


class FormatError(ValueError):
    """Malformed family, tree, parameter or certificate text."""
