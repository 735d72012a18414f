# apps/reports/management/commands/salem.py

from django.conf import settings

from apps.reports.analysis import salem_summary
from apps.reports.commands import SalemCommand
from apps.reports.models import SalemCheckReport
from apps.reports.schema import SALEM_CHECK_SCHEMA
from apps.reports.serializers import SalemCheckArgumentsSerializer, SalemCheckReportSerializer
from apps.salem.certify import certify_salem
from apps.salem.exceptions import NotSalem


class Command(SalemCommand):
    help = "salem check <poly>: certify that a polynomial is Salem. A negative answer is a result, not an error."
    arguments_serializer_class = SalemCheckArgumentsSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('action', help="Only 'check' is supported.")
        parser.add_argument('polynomial', help='Polynomial expression, or @file.')

    def run(self, options):
        args = self.validated(action=options['action'], polynomial=options['polynomial'])
        S = args['polynomial']
        try:
            cert = certify_salem(S, seed=settings.SALEMK3_SEED)
            report = SalemCheckReport(S, True, salem=salem_summary(cert, settings.SALEMK3_ALPHA_BITS))
        except NotSalem as exc:
            report = SalemCheckReport(S, False, reason=exc.reason.value)

        if options['as_json']:
            return self.emit_json(SalemCheckReportSerializer, report, SALEM_CHECK_SCHEMA)
        if not report.is_salem:
            self.stdout.write(self.style.WARNING(f"{S} is not a Salem polynomial: {report.reason}"))
            return
        summary = report.salem
        self.stdout.write(self.style.SUCCESS(f"{S} is a Salem polynomial"))
        self.stdout.write(
            f"degree {summary.degree}, alpha = {summary.alpha}, S(1) = {summary.s_at_1}, S(-1) = {summary.s_at_minus1}"
        )
