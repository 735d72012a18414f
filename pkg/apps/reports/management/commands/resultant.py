# apps/reports/management/commands/resultant.py

from django.conf import settings
from sympy import factorint

from apps.exact_poly.arithmetic import resultant
from apps.reports.commands import SalemCommand
from apps.reports.models import ResultantReport
from apps.reports.schema import RESULTANT_REPORT_SCHEMA
from apps.reports.serializers import PolynomialPairArgumentsSerializer, ResultantReportSerializer


class Command(SalemCommand):
    help = "Exact resultant of two integer polynomials, with its prime factorization."
    arguments_serializer_class = PolynomialPairArgumentsSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('f')
        parser.add_argument('g')

    def run(self, options):
        args = self.validated(f=options['f'], g=options['g'])
        f, g = args['f'], args['g']
        value = resultant(f, g)
        factors = tuple((int(p), int(e)) for p, e in sorted(factorint(abs(value)).items())) if abs(value) > 1 else ()
        report = ResultantReport(f, g, value, factors, settings.SALEMK3_VERSION)
        if options['as_json']:
            return self.emit_json(ResultantReportSerializer, report, RESULTANT_REPORT_SCHEMA)

        self.stdout.write(f"Res({f}, {g}) = {value}")
        if not value:
            self.stdout.write(self.style.WARNING("the polynomials have a common factor"))
        elif factors:
            self.stdout.write(' * '.join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors))
