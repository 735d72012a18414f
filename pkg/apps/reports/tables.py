# apps/reports/tables.py
"""
Salem tables: one polynomial per line as comma-separated integer
coefficients in descending degree order. '#' starts a comment and blank
lines are skipped.
"""

import logging
from pathlib import Path

import attrs

from apps.exact_poly.models import IntPoly
from apps.salem.certify import certify_salem
from apps.salem.exceptions import NotSalem

from .exceptions import TableFormatError

logger = logging.getLogger(__name__)


@attrs.frozen
class TableEntry:
    line: int
    polynomial: IntPoly
    comment: str = ''


def parse_table_line(text, line):
    try:
        coeffs = [int(field) for field in text.split(',')]
    except ValueError:
        raise TableFormatError(line, f"expected comma-separated integers, got {text!r}") from None
    poly = IntPoly.from_descending(coeffs)
    if poly.is_zero:
        raise TableFormatError(line, "the zero polynomial is not allowed")
    return poly


def read_salem_table(path):
    entries = []
    with Path(path).open() as handle:
        for number, raw in enumerate(handle, start=1):
            body, _, comment = raw.partition('#')
            body = body.strip()
            if not body:
                continue
            entries.append(TableEntry(number, parse_table_line(body, number), comment.strip()))
    logger.info("read %d polynomials from %s", len(entries), path)
    return entries


def ingest_salem_table(path, seed=0):
    """Entries paired with their Salem certificates; a line that is not Salem is a format error."""
    certified = []
    for entry in read_salem_table(path):
        try:
            certified.append((entry, certify_salem(entry.polynomial, seed=seed)))
        except NotSalem as exc:
            raise TableFormatError(entry.line, str(exc)) from exc
    return certified
