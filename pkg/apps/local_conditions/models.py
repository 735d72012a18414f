# apps/local_conditions/models.py

import attrs


@attrs.frozen
class C1Report:
    f1_at_1: int
    f1_at_minus1: int
    abs_squares: tuple
    signed_square: bool

    @property
    def holds(self):
        return all(self.abs_squares) and self.signed_square


@attrs.frozen
class TwoAdicClass:
    """t = 2^valuation * u with u odd and u = unit_mod8 (mod 8)."""
    valuation: int
    unit_mod8: int = attrs.field(validator=attrs.validators.in_((1, 3, 5, 7)))

    def __str__(self):
        return f"2^{self.valuation} * {self.unit_mod8} (mod 8)"
