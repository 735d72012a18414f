# apps/reports/management/commands/pi.py

from django.conf import settings

from apps.reports.analysis import build_pi_report
from apps.reports.commands import SalemCommand, describe_memberships
from apps.reports.schema import PI_REPORT_SCHEMA
from apps.reports.serializers import PiReportSerializer, PolynomialPairArgumentsSerializer


class Command(SalemCommand):
    help = "Pi_{f,g}: primes at which f and g share a symmetric irreducible factor."
    arguments_serializer_class = PolynomialPairArgumentsSerializer
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('f')
        parser.add_argument('g')

    def run(self, options):
        args = self.validated(f=options['f'], g=options['g'], seed=options['seed'])
        report = build_pi_report(args['f'], args['g'], args['seed'], settings.SALEMK3_VERSION)
        if options['as_json']:
            return self.emit_json(PiReportSerializer, report, PI_REPORT_SCHEMA)

        self.stdout.write(f"Res = {report.resultant}")
        for entry in report.memberships:
            line = f"  p = {entry.prime}: {entry.status.value}"
            if entry.witness is not None:
                line += f", symmetric common factor {entry.witness}"
            if entry.common_factors:
                line += f" (common factors mod p: {', '.join(map(str, entry.common_factors))})"
            self.stdout.write(line)
        self.stdout.write(self.style.SUCCESS(f"Pi = {describe_memberships(report.memberships)}"))
