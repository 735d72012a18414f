# apps/modp/exceptions.py

from apps.exact_poly.exceptions import ZeroConstantTerm


class ModularError(Exception):
    """Base class for errors raised by prime-field polynomial operations."""


class ModularZeroConstantTerm(ModularError, ZeroConstantTerm):
    pass


class NotAPrime(ModularError):
    def __init__(self, p):
        super().__init__(f"{p} is not a prime.")
        self.p = p
