# apps/reports/tests.py

import json
import tempfile
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from openpyxl import load_workbook
from rest_framework import serializers

from apps.cyclotomic.polynomials import phi_m
from apps.exact_poly.arithmetic import resultant
from apps.exact_poly.models import IntPoly
from apps.salem import catalog
from apps.salem.families import sa_polynomial

from .analysis import pi_orders
from .exceptions import ParseError, SchemaViolation, TableFormatError
from .jobs import FAMILY_COLUMNS, ScanTask, scan_row
from .models import RowStatus, ScanFamily
from .parsing import parse_poly, read_poly_argument
from .schema import ANALYSIS_REPORT_SCHEMA, SIGNATURE_REPORT_SCHEMA, validate_report
from .serializers import (
    AnalyzeArgumentsSerializer, BigIntegerField, KondoArgumentsSerializer, ScanArgumentsSerializer,
)
from .tables import ingest_salem_table, parse_table_line, read_salem_table

LEHMER_TEXT = 'x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1'


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--json'))


class ParsePolyTests(SimpleTestCase):

    def test_sa_example(self):
        self.assertEqual(parse_poly('x^6-3x^5-x^4+5x^3-x^2-3x+1'), sa_polynomial(3))

    def test_constant(self):
        self.assertEqual(parse_poly('1'), IntPoly((1,)))

    def test_doubled_sign_reports_position(self):
        with self.assertRaises(ParseError) as ctx:
            parse_poly('x^2 + + 3')
        self.assertEqual(ctx.exception.position, 6)

    def test_whitespace_capitals_and_repeated_monomials(self):
        self.assertEqual(parse_poly(' X ^ 2 + 2x^2 - 1 '), IntPoly((-1, 0, 3)))
        self.assertEqual(parse_poly('2 x + x'), IntPoly((0, 3)))

    def test_leading_sign_is_rejected(self):
        for text, position in {'-x^2 + 1': 0, '+x': 0, '  - 1': 2}.items():
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as ctx:
                    parse_poly(text)
                self.assertEqual(ctx.exception.position, position)

    def test_canonical_round_trip(self):
        self.assertEqual(str(parse_poly(LEHMER_TEXT)), LEHMER_TEXT)
        for poly in (catalog.LAMBDA18, catalog.LAMBDA20, catalog.SMYTH18, phi_m(15)):
            with self.subTest(poly=str(poly)):
                self.assertEqual(parse_poly(str(poly)), poly)

    def test_errors(self):
        cases = {'': 0, 'x^': 2, '2*x': 1, 'x^-2': 2, 'x x': 2, '3 +': 3}
        for text, position in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as ctx:
                    parse_poly(text)
                self.assertEqual(ctx.exception.position, position)


class SalemTableTests(SimpleTestCase):

    def test_bundled_table_certifies(self):
        certified = ingest_salem_table(settings.SALEMK3_TABLE)
        self.assertEqual(len(certified), 11)
        degrees = [cert.degree for _, cert in certified]
        self.assertEqual(degrees, sorted(degrees))
        polys = [entry.polynomial for entry, _ in certified]
        for poly in (catalog.LEHMER, catalog.LAMBDA16, catalog.LAMBDA18, catalog.LAMBDA20,
                     catalog.SECOND_SMALLEST_18, catalog.DEGREE20_ODD_VALUES):
            self.assertIn(poly, polys)

    def test_lambda18_provenance(self):
        entry = next(e for e in read_salem_table(settings.SALEMK3_TABLE) if e.polynomial == catalog.LAMBDA18)
        self.assertEqual(resultant(entry.polynomial, phi_m(12)), 169)
        self.assertIn('lambda18', entry.comment)

    def test_table_line(self):
        self.assertEqual(parse_table_line('1, -1, 0, -1, 1', 1), IntPoly.from_descending([1, -1, 0, -1, 1]))
        with self.assertRaises(TableFormatError) as ctx:
            parse_table_line('1,,2', 7)
        self.assertEqual(ctx.exception.line, 7)

    def test_comments_blank_lines_and_bad_rows(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'table.txt'
            path.write_text('# header\n\n1,-1,-1,-1,1  # degree 4\n1,0,0,0,1\n')
            entries = read_salem_table(path)
            self.assertEqual([e.line for e in entries], [3, 4])
            self.assertEqual(entries[0].comment, 'degree 4')
            with self.assertRaises(TableFormatError) as ctx:
                ingest_salem_table(path)
            self.assertEqual(ctx.exception.line, 4)

    def test_file_arguments(self):
        with tempfile.TemporaryDirectory() as tmp:
            expression = Path(tmp) / 'lehmer.txt'
            expression.write_text(LEHMER_TEXT + '\n')
            coefficients = Path(tmp) / 'lehmer.csv'
            coefficients.write_text('1,1,0,-1,-1,-1,-1,-1,0,1,1\n')
            self.assertEqual(read_poly_argument(f'@{expression}'), catalog.LEHMER)
            self.assertEqual(read_poly_argument(f'@{coefficients}'), catalog.LEHMER)


class SerializerTests(SimpleTestCase):

    def test_big_integers_become_strings(self):
        field = BigIntegerField()
        self.assertEqual(field.to_representation(2 ** 53), '9007199254740992')
        self.assertEqual(field.to_representation(-(2 ** 53) - 1), '-9007199254740993')
        self.assertEqual(field.to_representation(169), 169)

    def test_polynomial_field_rejects_bad_text(self):
        serializer = AnalyzeArgumentsSerializer(data={'polynomial': 'x^2 + + 3', 'seed': 0, 'm_cap': 66})
        self.assertFalse(serializer.is_valid())
        self.assertIn('position 6', str(serializer.errors['polynomial'][0]))

    def test_argument_ranges(self):
        serializer = AnalyzeArgumentsSerializer(data={'polynomial': LEHMER_TEXT, 'seed': -1, 'm_cap': 2})
        self.assertFalse(serializer.is_valid())
        self.assertEqual(set(serializer.errors), {'seed', 'm_cap'})

    def test_kondo_needs_exactly_one_selector(self):
        for data in ({}, {'m': 12, 'show_all': True}):
            with self.subTest(data=data):
                with self.assertRaises(serializers.ValidationError):
                    KondoArgumentsSerializer(data=data).is_valid(raise_exception=True)

    def test_scan_range(self):
        data = {'family': 'sa', 'start': 5, 'end': 2, 'jobs': 1, 'seed': 0, 'm_cap': 66}
        serializer = ScanArgumentsSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('end', serializer.errors)

    def test_schema_violation(self):
        with self.assertRaises(SchemaViolation):
            validate_report({'input': 'x'}, ANALYSIS_REPORT_SCHEMA)


class PiOrdersTests(SimpleTestCase):

    def test_every_order_up_to_the_cap(self):
        self.assertEqual(pi_orders(66), list(range(3, 67)))

    def test_totient_filter(self):
        self.assertEqual(pi_orders(12, max_totient=2), [3, 4, 6])


class AnalyzeCommandTests(SimpleTestCase):

    def test_lehmer_json(self):
        report = run_json('analyze', LEHMER_TEXT, '--seed', '1')
        self.assertEqual(report['input'], LEHMER_TEXT)
        self.assertEqual(report['salem'], {'degree': 10, 'alpha': '1.1762808183', 's_at_1': -1, 's_at_minus1': 1})
        self.assertTrue(report['c1']['holds'])
        self.assertEqual(report['unramified'], 'Unramified')
        verdict = report['verdict']
        self.assertEqual(verdict['salem_pairs'], 'RealizableAllRootsOfS')
        self.assertEqual(verdict['tag'], 'D10-SUFF')
        witnessed = {w.split(',')[0] for w in verdict['witnesses']}
        self.assertTrue({'m = 12', 'm = 14', 'm = 15', 'm = 36'} <= witnessed)
        self.assertEqual(report['meta'], {'version': settings.SALEMK3_VERSION, 'seed': 1})

        rows = {row['m']: row for row in report['pi']}
        self.assertEqual(list(rows), list(range(3, 67)))
        self.assertEqual(len(rows), 64)
        self.assertEqual(rows[66]['resultant'], resultant(catalog.LEHMER, phi_m(66)))
        members = {m: [p['p'] for p in row['primes'] if p['status'] == 'Member'] for m, row in rows.items()}
        self.assertEqual(members[12], [3])
        self.assertEqual(members[14], [13])
        self.assertEqual(members[15], [29])
        self.assertEqual(members[36], [3])

    def test_json_is_deterministic(self):
        first = run('analyze', LEHMER_TEXT, '--json', '--seed', '1', '--m-cap', '20')
        second = run('analyze', LEHMER_TEXT, '--json', '--seed', '1', '--m-cap', '20')
        self.assertEqual(first, second)

    def test_lambda18_text(self):
        out = run('analyze', str(catalog.LAMBDA18), '--m-cap', '12')
        self.assertIn('Pi(S, Phi12) = {}  [Res = 169]', out)
        self.assertIn('verdict: NotRealizableForRootsOfS [D18-IFF]', out)

    def test_lambda20_sub_certificate(self):
        report = run_json('analyze', str(catalog.LAMBDA20), '--m-cap', '12')
        self.assertEqual(report['salem']['alpha'], '1.2326135486')
        self.assertFalse(report['c1']['holds'])
        self.assertEqual(report['verdict']['tag'], 'TAKADA')
        self.assertIn('RELATIVELY-PRIME', report['verdict']['sub_tags'])

    def test_input_errors_exit_2(self):
        for text in ('x^2 + + 3', 'x^4+1', '2x^4+1', '+x^10+1', ' -x^10+1'):
            with self.subTest(text=text):
                with self.assertRaises(CommandError) as ctx:
                    run('analyze', text)
                self.assertEqual(ctx.exception.returncode, 2)


class SmallCommandTests(SimpleTestCase):

    def test_salem_check(self):
        out = run('salem', 'check', LEHMER_TEXT)
        self.assertIn('is a Salem polynomial', out)
        self.assertIn('alpha = 1.1762808183', out)
        report = run_json('salem', 'check', 'x^4+1')
        self.assertFalse(report['is_salem'])
        self.assertEqual(report['reason'], 'RootCountMismatch')
        self.assertIsNone(report['salem'])
        with self.assertRaises(CommandError) as ctx:
            run('salem', 'verify', LEHMER_TEXT)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_salem_check_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'lambda16.txt'
            path.write_text('1,-1,0,0,0,0,0,0,-1,0,0,0,0,0,0,-1,1\n')
            report = run_json('salem', 'check', f'@{path}')
        self.assertEqual(report['salem']['alpha'], '1.2363179318')

    def test_resultant(self):
        out = run('resultant', str(catalog.LAMBDA18), 'x^4-x^2+1')
        self.assertIn('= 169', out)
        self.assertIn('13^2', out)
        report = run_json('resultant', 'x^2+1', 'x^4-1')
        self.assertEqual(report['resultant'], 0)
        self.assertEqual(report['factors'], [])

    def test_pi_lambda18_phi12(self):
        report = run_json('pi', str(catalog.LAMBDA18), str(phi_m(12)))
        self.assertEqual(report['resultant'], 169)
        [entry] = report['primes']
        self.assertEqual(entry['p'], 13)
        self.assertEqual(entry['status'], 'NonMember')
        self.assertIsNone(entry['witness'])
        self.assertEqual(entry['common_factors'], ['x+6', 'x+11'])

    def test_pi_with_common_factor_exits_2(self):
        with self.assertRaises(CommandError) as ctx:
            run('pi', 'x^2+1', 'x^4-1')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_obstruction_ranks(self):
        F = sa_polynomial(3) * phi_m(10) ** 4
        report = run_json('obstruction', str(F))
        self.assertEqual(report['graph']['gf_rank'], 1)
        self.assertEqual(report['graph']['exactness'], 'Exact')
        self.assertEqual((report['s_plus'], report['s_minus']), (0, 0))

        F = sa_polynomial(3) * phi_m(10) ** 2 * IntPoly((-1, 1)) ** 8
        out = run('obstruction', str(F))
        self.assertIn('rank of G_F = 2', out)

    def test_obstruction_input_errors(self):
        for args in (('x^2+2',), ('x^2+3x+1', '--s-plus', '1')):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    run('obstruction', *args)
                self.assertEqual(ctx.exception.returncode, 2)

    def test_kondo_all(self):
        report = run_json('kondo', '--all')
        self.assertEqual(report['sigma'], [12, 28, 36, 42, 44, 66])
        self.assertEqual(report['omega'], [3, 5, 7, 9, 11, 13, 17, 19, 25, 27])
        out = run('kondo', '12')
        self.assertIn('m = 12: Sigma', out)

    def test_kondo_errors(self):
        for args in ((), ('2',), ('23',), ('12', '--all')):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    run('kondo', *args)
                self.assertEqual(ctx.exception.returncode, 2)

    def test_power_of_lambda18(self):
        report = run_json('power', str(catalog.LAMBDA18), '2')
        self.assertEqual(report['salem']['degree'], 18)
        rows = {row['m']: row for row in report['pi']}
        self.assertEqual(set(rows), {3, 4, 5, 6, 8, 10, 12})
        statuses = {p['p']: p['status'] for p in rows[4]['primes']}
        self.assertEqual(statuses, {7: 'Member'})
        self.assertEqual(rows[6]['resultant'], 169)
        self.assertEqual({p['p']: p['status'] for p in rows[6]['primes']}, {13: 'NonMember'})


class SignatureCommandTests(SimpleTestCase):

    def test_lehmer_maps_satisfy_every_clause(self):
        out = run('signature', LEHMER_TEXT, '--json')
        report = json.loads(out)
        validate_report(report, SIGNATURE_REPORT_SCHEMA)
        self.assertEqual(report['polynomial'], LEHMER_TEXT)
        self.assertEqual([entry['z'] for entry in report['maps']], [0, 1, 2, 3])
        for entry in report['maps']:
            with self.subTest(z=entry['z']):
                self.assertEqual((entry['r'], entry['s']), (3, 7))
                self.assertEqual(entry['violations'], [])
                values = {(a['kind'], a['index']): (a['r'], a['s']) for a in entry['assignments']}
                self.assertEqual(values[('Factor', None)], (3, 7))
                self.assertEqual(values[('UnitCirclePair', entry['z'])], (2, 0))

    def test_single_pair_text(self):
        out = run('signature', LEHMER_TEXT, '--z', '2')
        self.assertIn('tau_(S,2): maximum (3, 7)', out)
        self.assertNotIn('tau_(S,0)', out)
        self.assertNotIn('violates', out)

    def test_input_errors_exit_2(self):
        for args in ((LEHMER_TEXT, '--z', '4'), ('x^4+1',)):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    run('signature', *args)
                self.assertEqual(ctx.exception.returncode, 2)


class ScanCommandTests(SimpleTestCase):

    def test_sa_family(self):
        report = run_json('scan', '--family', 'sa', '--from', '0', '--to', '5', '--seed', '1')
        self.assertEqual(report['columns'], list(FAMILY_COLUMNS[ScanFamily.SA]))
        rows = report['rows']
        self.assertEqual([row['a'] for row in rows], list(range(6)))
        self.assertTrue(all(row['formulas_hold'] for row in rows))
        self.assertEqual([row['res_phi3'] for row in rows], [(3 * a + 2) ** 2 for a in range(6)])
        self.assertEqual([row['rank_phi3'] for row in rows], [0] * 6)
        self.assertEqual([row['rank_phi4'] for row in rows], [1, 0, 0, 0, 0, 0])
        self.assertEqual({row['tag'] for row in rows}, {'CONGR4a'})

    def test_workers_preserve_order(self):
        serial = run('scan', '--family', 'sa', '--from', '0', '--to', '3', '--json')
        parallel = run('scan', '--family', 'sa', '--from', '0', '--to', '3', '--json', '--jobs', '2')
        self.assertEqual(serial, parallel)

    def test_b_family_outside_hypothesis(self):
        report = run_json('scan', '--family', 'b', '--from', '0', '--to', '2', '--b-param', '1')
        self.assertEqual({row['status'] for row in report['rows']}, {RowStatus.SKIPPED.value})

    def test_smyth18(self):
        report = run_json('scan', '--family', 'smyth18', '--from', '3', '--to', '3', '--m-cap', '12')
        [row] = report['rows']
        self.assertEqual(row['status'], 'ok')
        self.assertEqual(abs(row['s_at_1'] * row['s_at_minus1']), 1)
        self.assertEqual(row['excluded'], 'Excluded')
        self.assertEqual(row['verdict'], 'NotRealizableForRootsOfS')

    def test_row_marks_non_salem(self):
        row = scan_row(ScanTask(ScanFamily.SA.value, -3))
        self.assertEqual(row['status'], RowStatus.NOT_SALEM.value)
        self.assertTrue(row['formulas_hold'])
        self.assertIsNone(row['rank_phi3'])

    def test_xlsx(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'sa.xlsx'
            run('scan', '--family', 'sa', '--from', '0', '--to', '2', '--xlsx', str(path))
            sheet = load_workbook(path).active
            rows = list(sheet.iter_rows(values_only=True))
        self.assertEqual(rows[0], FAMILY_COLUMNS[ScanFamily.SA])
        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[1][0], 0)

    def test_bad_arguments(self):
        for args in (('--family', 'sa', '--from', '3', '--to', '1'), ('--family', 'nope', '--from', '0', '--to', '1')):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    run('scan', *args)
                self.assertEqual(ctx.exception.returncode, 2)


class TableCommandTests(SimpleTestCase):

    def test_bundled_table(self):
        report = run_json('table')
        self.assertEqual(len(report['rows']), 11)
        self.assertEqual(report['rows'][0]['degree'], 4)
        lehmer = next(row for row in report['rows'] if row['comment'] == 'Lehmer')
        self.assertEqual(lehmer['alpha'], '1.1762808183')

    def test_classify(self):
        report = run_json('table', '--classify', '--m-cap', '36')
        by_comment = {row['comment']: row for row in report['rows']}
        self.assertEqual(by_comment['Lehmer']['tag'], 'D10-SUFF')
        self.assertEqual(by_comment['lambda16']['tag'], 'CONGR4a')
        self.assertEqual(by_comment['lambda18, Res(S, Phi12) = 169']['verdict'], 'NotRealizableForRootsOfS')
        self.assertEqual(by_comment['degree 18, S(1) = -5']['tag'], 'NBS-i')

    def test_bad_tables_exit_2(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.txt'
            path.write_text('1,2,x\n')
            for target in (str(path), str(Path(tmp) / 'missing.txt')):
                with self.subTest(target=target):
                    with self.assertRaises(CommandError) as ctx:
                        run('table', target)
                    self.assertEqual(ctx.exception.returncode, 2)
