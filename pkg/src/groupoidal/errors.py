"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input does not describe the structure it claims to.

    ``witness`` holds the offending elements (a pair or triple of indices,
    or whatever else pins the failure down).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceededError(RuntimeError):
    """An enumeration grew beyond its configured cap."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class UnsupportedFieldError(ValueError):
    """The requested field cannot be used for this computation
    (characteristic divides a group order, or the field does not split)."""
