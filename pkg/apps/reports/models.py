# apps/reports/models.py

import attrs
from django.db import models


class ScanFamily(models.TextChoices):
    SA = 'sa', 'S_a, degree 6'
    GM10 = 'gm10', 'Degree 10, R = (X+1)^2 (X^2-4)(X-a) - 1'
    B = 'b', 'Degree 10, R = (X^2-4)(X^3 + aX^2 + (b-1)X + c) - 1'
    SMYTH18 = 'smyth18', 'Degree 18, R = X^2 (X^2-4)(X^2-3)(X^2-1)(X-a) - 1'


class RowStatus(models.TextChoices):
    OK = 'ok', 'Computed'
    SKIPPED = 'skipped', 'Outside the family hypothesis'
    NOT_SALEM = 'not-salem', 'Not a Salem polynomial'


@attrs.frozen
class ReportMeta:
    version: str
    seed: int


@attrs.frozen
class SalemSummary:
    degree: int
    alpha: str
    s_at_1: int
    s_at_minus1: int


@attrs.frozen
class PiRow:
    m: int
    resultant: int
    memberships: tuple


@attrs.frozen
class AnalysisReport:
    input: str
    salem: SalemSummary
    c1: object
    unramified: str
    pi: tuple
    verdict: object
    meta: ReportMeta


@attrs.frozen
class PiReport:
    f: object
    g: object
    resultant: int
    memberships: tuple
    meta: ReportMeta


@attrs.frozen
class ObstructionReport:
    polynomial: object
    s_plus: int
    s_minus: int
    graph: object
    meta: ReportMeta


@attrs.frozen
class PowerReport:
    polynomial: object
    k: int
    power: object
    salem: SalemSummary
    pi: tuple
    meta: ReportMeta


@attrs.frozen
class SignatureAssignment:
    descriptor: object
    r: int
    s: int


@attrs.frozen
class SignatureMapReport:
    """tau_{S,z} for one unit-circle pair z, with the clauses it breaks."""
    z: int
    r: int
    s: int
    assignments: tuple
    violations: tuple


@attrs.frozen
class SignatureReport:
    polynomial: object
    maps: tuple
    meta: ReportMeta


@attrs.frozen
class RowsReport:
    """Rows of a family scan or a table run, in input order."""
    source: str
    columns: tuple
    rows: tuple
    meta: ReportMeta


@attrs.frozen
class SalemCheckReport:
    polynomial: object
    is_salem: bool
    reason: str = None
    salem: SalemSummary = None


@attrs.frozen
class ResultantReport:
    f: object
    g: object
    resultant: int
    factors: tuple
    version: str
