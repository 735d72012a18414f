# apps/reports/management/commands/power.py

from django.conf import settings

from apps.reports.analysis import build_power_report
from apps.reports.commands import SalemCommand, describe_memberships
from apps.reports.schema import POWER_REPORT_SCHEMA
from apps.reports.serializers import PowerArgumentsSerializer, PowerReportSerializer


class Command(SalemCommand):
    help = "Minimal polynomial of alpha^k for a Salem number alpha, with its Pi sets against Phi_m."
    arguments_serializer_class = PowerArgumentsSerializer
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('polynomial', help='Salem polynomial of alpha, or @file.')
        parser.add_argument('k', type=int)
        parser.add_argument('--m-cap', type=int, dest='m_cap', default=settings.SALEMK3_M_CAP)

    def run(self, options):
        args = self.validated(
            polynomial=options['polynomial'], k=options['k'], seed=options['seed'], m_cap=options['m_cap'],
        )
        report = build_power_report(
            args['polynomial'], args['k'], args['seed'], args['m_cap'],
            settings.SALEMK3_ALPHA_BITS, settings.SALEMK3_VERSION,
        )
        if options['as_json']:
            return self.emit_json(PowerReportSerializer, report, POWER_REPORT_SCHEMA)

        salem = report.salem
        self.emit_lines([
            f"S_{report.k} = {report.power}",
            f"degree {salem.degree}, alpha^{report.k} = {salem.alpha}, "
            f"S_{report.k}(1) = {salem.s_at_1}, S_{report.k}(-1) = {salem.s_at_minus1}",
        ])
        for row in report.pi:
            if row.memberships:
                self.stdout.write(f"  Pi(S_{report.k}, Phi{row.m}) = {describe_memberships(row.memberships)}  [Res = {row.resultant}]")
