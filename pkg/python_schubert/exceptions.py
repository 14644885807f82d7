class SchubertError(Exception):
    """
    Generic error raised by library.
    """
    pass


class SchubertValidationError(SchubertError):
    """
    Raised on attribute or argument validation failure.
    """
    pass


class InexactDivisionError(SchubertError):
    """
    Raised when an exact division leaves a remainder.
    """
    pass


class GuardExceededError(SchubertError):
    """
    Raised when an enumeration grows past its configured guard.
    """
    pass
