# apps/signatures/exceptions.py


class SignatureError(Exception):
    """Base class for errors raised while building signature maps."""


class IndexOutOfRange(SignatureError):
    def __init__(self, index, count):
        super().__init__(f"Pair index {index} is out of range; the polynomial has {count} unit-circle pairs.")
        self.index = index
        self.count = count


class DegreeMismatch(SignatureError):
    pass
