# apps/salem/exceptions.py


class SalemError(Exception):
    """Base class for errors raised by Salem certification."""


class NotSalem(SalemError):
    def __init__(self, reason, detail=''):
        message = f"Not a Salem polynomial: {reason.label}."
        if detail:
            message = f"{message} {detail}"
        super().__init__(message)
        self.reason = reason


class InternalDegeneracy(SalemError):
    """A construction that must succeed for Salem input did not."""
