# apps/classifier/exceptions.py


class ClassifierError(Exception):
    """Base class for errors raised by the realizability classifier."""


class DegreeOutOfRange(ClassifierError):
    def __init__(self, degree):
        super().__init__(f"Salem degree {degree} is outside 4..22.")
        self.degree = degree


class DegreeMismatch(ClassifierError):
    def __init__(self, degree, expected):
        super().__init__(f"This test needs a Salem polynomial of degree {expected}, got {degree}.")
        self.degree = degree
        self.expected = expected


class OrderTooSmall(ClassifierError):
    def __init__(self, m):
        super().__init__(f"Order {m} is below 3.")
        self.m = m


class TotientTooLarge(ClassifierError):
    def __init__(self, m, phi):
        super().__init__(f"phi({m}) = {phi} exceeds 20.")
        self.m = m
        self.phi = phi
