# apps/cyclotomic/exceptions.py


class CyclotomicError(Exception):
    """Base class for errors raised while generating cyclotomic data."""


class CyclotomicConsistencyError(CyclotomicError):
    """Direct evaluation disagrees with a closed form; this is an internal error."""

    def __init__(self, m, computed, expected):
        super().__init__(
            f"Phi_{m}(1), Phi_{m}(-1) evaluated to {computed}, closed form gives {expected}."
        )
        self.m = m
        self.computed = computed
        self.expected = expected
