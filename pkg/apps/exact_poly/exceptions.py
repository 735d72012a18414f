# apps/exact_poly/exceptions.py


class PolynomialError(Exception):
    """Base class for errors raised by integer polynomial operations."""


class ZeroConstantTerm(PolynomialError):
    def __init__(self, poly):
        super().__init__(f"{poly} has zero constant term; its reciprocal is undefined.")
        self.poly = poly


class NonIntegralReciprocal(PolynomialError):
    def __init__(self, poly):
        super().__init__(f"The reciprocal of {poly} does not have integer coefficients.")
        self.poly = poly


class NotSymmetric(PolynomialError):
    pass


class EndpointIsRoot(PolynomialError):
    def __init__(self, poly, point):
        super().__init__(f"{point} is a root of {poly}.")
        self.poly = poly
        self.point = point


class InexactDivision(PolynomialError):
    pass
