# apps/reports/management/commands/kondo.py

from apps.classifier.kondo import kondo_classify, kondo_table
from apps.classifier.models import KondoClassKind
from apps.reports.commands import SalemCommand
from apps.reports.schema import KONDO_REPORT_SCHEMA
from apps.reports.serializers import KondoArgumentsSerializer, KondoReportSerializer


class Command(SalemCommand):
    help = "Classify orders m with phi(m) <= 20 into the Sigma and Omega lists."
    arguments_serializer_class = KondoArgumentsSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('m', nargs='?', type=int)
        parser.add_argument('--all', action='store_true', dest='show_all', help='Every order with phi(m) <= 20.')

    def run(self, options):
        args = self.validated(m=options['m'], show_all=options['show_all'])
        classes = kondo_table() if args['show_all'] else [kondo_classify(args['m'])]
        report = {
            'sigma': [c.m for c in classes if c.kind == KondoClassKind.SIGMA],
            'omega': [c.m for c in classes if c.kind == KondoClassKind.OMEGA],
            'classes': classes,
        }
        if options['as_json']:
            return self.emit_json(KondoReportSerializer, report, KONDO_REPORT_SCHEMA)

        if args['show_all']:
            self.stdout.write(self.style.SUCCESS(f"Sigma = {{{', '.join(map(str, report['sigma']))}}}"))
            self.stdout.write(self.style.SUCCESS(f"Omega = {{{', '.join(map(str, report['omega']))}}}"))
        for c in classes:
            self.stdout.write(f"m = {c.m}: {c.kind.value}" + (f" ({c.reason})" if c.reason else ''))
