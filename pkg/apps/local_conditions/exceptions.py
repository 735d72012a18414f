# apps/local_conditions/exceptions.py


class LocalConditionError(Exception):
    """Base class for errors raised while testing local conditions."""


class ZeroInput(LocalConditionError):
    def __init__(self):
        super().__init__("Zero has no 2-adic square class.")


class OddDegree(LocalConditionError):
    def __init__(self, poly):
        super().__init__(f"{poly} has odd degree {poly.degree}.")
        self.poly = poly
