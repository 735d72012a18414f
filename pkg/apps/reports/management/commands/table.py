# apps/reports/management/commands/table.py

from django.conf import settings

from apps.reports.commands import SalemCommand
from apps.reports.jobs import TABLE_COLUMNS, table_rows, write_workbook
from apps.reports.models import ReportMeta, RowsReport
from apps.reports.schema import ROWS_REPORT_SCHEMA
from apps.reports.serializers import RowsReportSerializer

VERDICT_COLUMNS = ('verdict', 'tag', 'witnesses')


class Command(SalemCommand):
    help = "Certify every polynomial of a Salem table, optionally classifying each one."
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('file', nargs='?', default=settings.SALEMK3_TABLE, help='Defaults to the bundled table.')
        parser.add_argument('--classify', action='store_true')
        parser.add_argument('--m-cap', type=int, dest='m_cap', default=settings.SALEMK3_M_CAP)
        parser.add_argument('--xlsx', help='Also write the rows to this workbook.')

    def run(self, options):
        rows = table_rows(
            options['file'], seed=options['seed'], m_cap=options['m_cap'],
            alpha_bits=settings.SALEMK3_ALPHA_BITS, with_verdict=options['classify'],
        )
        columns = TABLE_COLUMNS + (VERDICT_COLUMNS if options['classify'] else ())
        if options['xlsx']:
            write_workbook('salem table', columns, rows, options['xlsx'])
        if options['as_json']:
            report = RowsReport(str(options['file']), columns, tuple(rows), ReportMeta(settings.SALEMK3_VERSION, options['seed']))
            return self.emit_json(RowsReportSerializer, report, ROWS_REPORT_SCHEMA)

        for row in rows:
            line = f"{row['line']}: degree {row['degree']}, alpha = {row['alpha']}, S(1) = {row['s_at_1']}, S(-1) = {row['s_at_minus1']}"
            if options['classify']:
                line += f", {row['verdict']} [{row['tag']}]"
            self.stdout.write(line)
        self.stdout.write(self.style.SUCCESS(f"{len(rows)} Salem polynomials certified"))
