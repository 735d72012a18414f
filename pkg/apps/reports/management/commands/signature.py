# apps/reports/management/commands/signature.py

from django.conf import settings

from apps.reports.analysis import build_signature_report
from apps.reports.commands import SalemCommand
from apps.reports.schema import SIGNATURE_REPORT_SCHEMA
from apps.reports.serializers import SignatureArgumentsSerializer, SignatureReportSerializer
from apps.salem.exceptions import InternalDegeneracy


class Command(SalemCommand):
    help = "The signature maps tau_{S,z} of a Salem polynomial, checked against the signature map clauses."
    arguments_serializer_class = SignatureArgumentsSerializer
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('polynomial', help='Salem polynomial, or @file.')
        parser.add_argument('--z', type=int, help='Only this unit-circle pair; pairs are indexed by decreasing real part.')

    def run(self, options):
        args = self.validated(polynomial=options['polynomial'], z=options['z'], seed=options['seed'])
        report = build_signature_report(args['polynomial'], args['z'], args['seed'], settings.SALEMK3_VERSION)
        if options['as_json']:
            self.emit_json(SignatureReportSerializer, report, SIGNATURE_REPORT_SCHEMA)
        else:
            self.stdout.write(f"S = {report.polynomial}")
            for entry in report.maps:
                self.stdout.write(f"tau_(S,{entry.z}): maximum ({entry.r}, {entry.s})")
                self.emit_lines(f"  {a.descriptor} -> ({a.r}, {a.s})" for a in entry.assignments)
                self.emit_lines(f"  violates {v}" for v in entry.violations)

        broken = [entry.z for entry in report.maps if entry.violations]
        if broken:
            raise InternalDegeneracy(f"tau_(S,z) fails the signature map clauses for z in {broken}")
        if not options['as_json']:
            self.stdout.write(self.style.SUCCESS("every map satisfies the signature map clauses"))
