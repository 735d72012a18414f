# apps/reports/management/commands/scan.py

from django.conf import settings

from apps.reports.commands import SalemCommand
from apps.reports.jobs import FAMILY_COLUMNS, run_scan, write_workbook
from apps.reports.models import ReportMeta, RowsReport, RowStatus, ScanFamily
from apps.reports.schema import ROWS_REPORT_SCHEMA
from apps.reports.serializers import RowsReportSerializer, ScanArgumentsSerializer


class Command(SalemCommand):
    help = "Scan a parametrized family of Salem polynomials over a range of a."
    arguments_serializer_class = ScanArgumentsSerializer
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('--family', required=True, help=f"One of {', '.join(ScanFamily.values)}.")
        parser.add_argument('--from', type=int, dest='start', required=True)
        parser.add_argument('--to', type=int, dest='end', required=True)
        parser.add_argument('--jobs', type=int, default=settings.SALEMK3_JOBS, help='Worker processes.')
        parser.add_argument('--m-cap', type=int, dest='m_cap', default=settings.SALEMK3_M_CAP)
        parser.add_argument('--b-param', type=int, dest='b_param', default=0, help='Fixed b for family b.')
        parser.add_argument('--c-param', type=int, dest='c_param', default=0, help='Fixed c for family b.')
        parser.add_argument('--xlsx', help='Also write the rows to this workbook.')

    def run(self, options):
        args = self.validated(**{
            key: options[key]
            for key in ('family', 'start', 'end', 'jobs', 'seed', 'm_cap', 'b_param', 'c_param')
        })
        family = ScanFamily(args['family'])
        rows = run_scan(
            family, args['start'], args['end'], seed=args['seed'], m_cap=args['m_cap'], jobs=args['jobs'],
            b=args['b_param'], c=args['c_param'],
        )
        columns = FAMILY_COLUMNS[family]
        if options['xlsx']:
            write_workbook(f"scan {family.value}", columns, rows, options['xlsx'])
        if options['as_json']:
            report = RowsReport(
                source=f"scan {family.value} [{args['start']}, {args['end']}]",
                columns=columns,
                rows=tuple(rows),
                meta=ReportMeta(settings.SALEMK3_VERSION, args['seed']),
            )
            return self.emit_json(RowsReportSerializer, report, ROWS_REPORT_SCHEMA)

        self.stdout.write('\t'.join(columns))
        for row in rows:
            line = '\t'.join('' if row[column] is None else str(row[column]) for column in columns)
            if row['status'] != RowStatus.OK:
                self.stdout.write(self.style.WARNING(line))
            elif row.get('formulas_hold') is False:
                self.stdout.write(self.style.ERROR(line))
            else:
                self.stdout.write(line)
        self.stdout.write(self.style.SUCCESS(f"{len(rows)} rows"))
