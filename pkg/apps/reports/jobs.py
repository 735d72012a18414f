# apps/reports/jobs.py

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed

import attrs
from openpyxl import Workbook

from apps.classifier.decision import classify
from apps.classifier.exclusions import exclude_any_realization_deg18
from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.arithmetic import resultant
from apps.exact_poly.models import X_MINUS_ONE
from apps.obstruction.graph import obstruction_group
from apps.obstruction.ramification import unramified_status
from apps.salem.certify import certify_salem
from apps.salem.exceptions import NotSalem
from apps.salem.families import (
    b_family_hypothesis, b_family_polynomial, gm10_polynomial, sa_polynomial, smyth18_polynomial,
)

from .analysis import salem_summary
from .models import RowStatus, ScanFamily
from .tables import ingest_salem_table

logger = logging.getLogger(__name__)

# Cells hold floats; larger integers go in as text.
EXACT_CELL_LIMIT = 2 ** 53

_HEAD = ('a', 'status', 'detail', 'polynomial')
_VERDICT = ('verdict', 'tag', 'witnesses')

FAMILY_COLUMNS = {
    ScanFamily.SA: _HEAD + (
        'res_phi3', 'expected_phi3', 'res_phi4', 'expected_phi4', 'formulas_hold', 'rank_phi3', 'rank_phi4',
    ) + _VERDICT,
    ScanFamily.GM10: _HEAD + ('s_at_1', 's_at_minus1', 'unramified') + _VERDICT,
    ScanFamily.B: _HEAD + ('b', 'c', 'res_phi3', 'expected_phi3', 'formulas_hold') + _VERDICT,
    ScanFamily.SMYTH18: _HEAD + ('s_at_1', 's_at_minus1', 'excluded') + _VERDICT,
}

TABLE_COLUMNS = ('line', 'comment', 'polynomial', 'degree', 'alpha', 's_at_1', 's_at_minus1')


@attrs.frozen
class ScanTask:
    family: str
    a: int
    seed: int = 0
    m_cap: int = 66
    b: int = 0
    c: int = 0


def _verdict_cells(S, seed, m_cap):
    verdict = classify(S, seed=seed, m_cap=m_cap)
    return {
        'verdict': verdict.salem_pairs.value,
        'tag': verdict.tag.value,
        'witnesses': '; '.join(str(w) for w in verdict.certificate.witnesses),
    }


def _certified(S, row, task):
    """Certify S, marking the row when it is not Salem."""
    try:
        return certify_salem(S, seed=task.seed)
    except NotSalem as exc:
        row.update(status=RowStatus.NOT_SALEM.value, detail=exc.reason.value)
        return None


def _sa_row(task, row):
    a = task.a
    S = sa_polynomial(a)
    r3, r4 = resultant(S, phi_m(3)), resultant(S, phi_m(4))
    expected3, expected4 = (3 * (a + 1) - 1) ** 2, (4 * a - 1) ** 2
    row.update(
        polynomial=str(S), res_phi3=r3, expected_phi3=expected3, res_phi4=r4, expected_phi4=expected4,
        formulas_hold=(r3, r4) == (expected3, expected4),
    )
    if _certified(S, row, task) is None:
        return row
    tail = X_MINUS_ONE ** 12
    for m, key in ((3, 'rank_phi3'), (4, 'rank_phi4')):
        graph = obstruction_group(S * phi_m(m) ** 2 * tail, 12, 0, seed=task.seed)
        row[key] = graph.gf_rank
    row.update(_verdict_cells(S, task.seed, task.m_cap))
    return row


def _gm10_row(task, row):
    S = gm10_polynomial(task.a)
    row['polynomial'] = str(S)
    cert = _certified(S, row, task)
    if cert is None:
        return row
    row.update(s_at_1=cert.s_at_1, s_at_minus1=cert.s_at_minus1, unramified=str(unramified_status(S)))
    row.update(_verdict_cells(S, task.seed, task.m_cap))
    return row


def _b_row(task, row):
    a, b, c = task.a, task.b, task.c
    row.update(b=b, c=c)
    if not b_family_hypothesis(a, b, c):
        row.update(status=RowStatus.SKIPPED.value, detail='needs c >= 0 and a + c < -|b|')
        return row
    S = b_family_polynomial(a, b, c)
    r3, expected3 = resultant(S, phi_m(3)), (-3 * (a - b + c) - 1) ** 2
    row.update(polynomial=str(S), res_phi3=r3, expected_phi3=expected3, formulas_hold=r3 == expected3)
    if _certified(S, row, task) is None:
        return row
    row.update(_verdict_cells(S, task.seed, task.m_cap))
    return row


def _smyth18_row(task, row):
    S = smyth18_polynomial(task.a)
    row['polynomial'] = str(S)
    cert = _certified(S, row, task)
    if cert is None:
        return row
    row.update(
        s_at_1=cert.s_at_1, s_at_minus1=cert.s_at_minus1,
        excluded=exclude_any_realization_deg18(S).value,
    )
    row.update(_verdict_cells(S, task.seed, task.m_cap))
    return row


_ROW_BUILDERS = {
    ScanFamily.SA: _sa_row,
    ScanFamily.GM10: _gm10_row,
    ScanFamily.B: _b_row,
    ScanFamily.SMYTH18: _smyth18_row,
}


def scan_row(task):
    """One row of a family scan, with every column of the family present."""
    family = ScanFamily(task.family)
    row = dict.fromkeys(FAMILY_COLUMNS[family])
    row.update(a=task.a, status=RowStatus.OK.value, detail='')
    return _ROW_BUILDERS[family](task, row)


def run_scan(family, start, end, seed=0, m_cap=66, jobs=1, b=0, c=0):
    tasks = [ScanTask(ScanFamily(family).value, a, seed, m_cap, b, c) for a in range(start, end + 1)]
    logger.info("scanning family %s for a in [%d, %d] with %d workers", family, start, end, jobs)
    if jobs <= 1 or len(tasks) <= 1:
        return [scan_row(task) for task in tasks]

    rows = [None] * len(tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {pool.submit(scan_row, task): index for index, task in enumerate(tasks)}
        for done, future in enumerate(as_completed(futures), start=1):
            rows[futures[future]] = future.result()
            logger.info("scan progress: %d of %d rows", done, len(tasks))
    return rows


def table_rows(path, seed=0, m_cap=66, alpha_bits=44, with_verdict=False):
    rows = []
    for entry, cert in ingest_salem_table(path, seed=seed):
        summary = salem_summary(cert, alpha_bits)
        row = {
            'line': entry.line,
            'comment': entry.comment,
            'polynomial': str(entry.polynomial),
            'degree': summary.degree,
            'alpha': summary.alpha,
            's_at_1': summary.s_at_1,
            's_at_minus1': summary.s_at_minus1,
        }
        if with_verdict:
            row.update(_verdict_cells(entry.polynomial, seed, m_cap))
        rows.append(row)
    return rows


def _cell(value):
    if isinstance(value, int) and not isinstance(value, bool) and abs(value) >= EXACT_CELL_LIMIT:
        return str(value)
    return value


def write_workbook(title, columns, rows, path):
    workbook = Workbook()
    sheet = workbook.active
    sheet.title = title[:31]
    sheet.append(list(columns))
    for row in rows:
        sheet.append([_cell(row.get(column)) for column in columns])
    workbook.save(path)
    logger.info("wrote %d rows to %s", len(rows), path)
