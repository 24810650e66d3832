class SchurlabError(Exception):
    """Base class for library errors."""


class UsageError(SchurlabError, ValueError):
    """Bad arguments: mismatched contexts, malformed input, violated preconditions."""


class SingularPointError(SchurlabError, ZeroDivisionError):
    """A sampled evaluation point hits a vanishing denominator."""


class SamplingError(SchurlabError):
    """No nonsingular point was found within the retry budget."""
