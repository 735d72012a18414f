# apps/reports/management/commands/obstruction.py

from django.conf import settings

from apps.obstruction.models import Exactness
from apps.reports.analysis import build_obstruction_report
from apps.reports.commands import SalemCommand
from apps.reports.schema import OBSTRUCTION_REPORT_SCHEMA
from apps.reports.serializers import ObstructionArgumentsSerializer, ObstructionReportSerializer


class Command(SalemCommand):
    help = "The obstruction group G_F(D+, D-) of a symmetric polynomial F with F(0) = 1."
    arguments_serializer_class = ObstructionArgumentsSerializer
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('polynomial', help='Polynomial expression, or @file.')
        parser.add_argument('--s-plus', type=int, dest='s_plus', help='Defaults to the multiplicity of X - 1.')
        parser.add_argument('--s-minus', type=int, dest='s_minus', help='Defaults to the multiplicity of X + 1.')

    def run(self, options):
        args = self.validated(
            polynomial=options['polynomial'], s_plus=options['s_plus'], s_minus=options['s_minus'], seed=options['seed'],
        )
        report = build_obstruction_report(
            args['polynomial'], args['s_plus'], args['s_minus'], args['seed'], settings.SALEMK3_VERSION,
        )
        if options['as_json']:
            return self.emit_json(ObstructionReportSerializer, report, OBSTRUCTION_REPORT_SCHEMA)

        graph = report.graph
        self.emit_lines([
            f"F = {report.polynomial}",
            f"s+ = {report.s_plus}, s- = {report.s_minus}, D+ = {graph.d_plus}, D- = {graph.d_minus}",
            f"components: {' | '.join('{' + ', '.join(map(str, c)) + '}' for c in graph.components)}",
            *(f"  {e.f} -- {e.g} at {e.prime} ({e.rule.value})" for e in graph.edges),
        ])
        if graph.exactness == Exactness.EXACT:
            self.stdout.write(self.style.SUCCESS(f"rank of G_F = {graph.gf_rank}"))
            return
        self.stdout.write(self.style.WARNING(
            f"rank of G_F >= {graph.best_case_rank} and <= {graph.gf_rank}; "
            f"{len(graph.indeterminate)} undecided edges"
        ))
