# apps/obstruction/exceptions.py


class ObstructionError(Exception):
    """Base class for errors raised while building obstruction graphs."""


class ZeroResultant(ObstructionError):
    def __init__(self, f, g):
        super().__init__(f"{f} and {g} have a common factor; Pi is only defined for coprime factors.")
        self.f = f
        self.g = g
