# apps/reports/management/commands/analyze.py

from django.conf import settings

from apps.classifier.models import SalemPairsVerdict
from apps.reports.analysis import build_analysis_report
from apps.reports.commands import SalemCommand, describe_memberships
from apps.reports.schema import ANALYSIS_REPORT_SCHEMA
from apps.reports.serializers import AnalysisReportSerializer, AnalyzeArgumentsSerializer


class Command(SalemCommand):
    help = "Certify a Salem polynomial and decide whether its Salem number is a K3 dynamical degree."
    arguments_serializer_class = AnalyzeArgumentsSerializer
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('polynomial', help='Polynomial expression, or @file.')
        parser.add_argument('--m-cap', type=int, dest='m_cap', default=settings.SALEMK3_M_CAP,
                            help='Largest cyclotomic order searched.')

    def run(self, options):
        args = self.validated(polynomial=options['polynomial'], seed=options['seed'], m_cap=options['m_cap'])
        report = build_analysis_report(
            options['polynomial'], args['polynomial'], args['seed'], args['m_cap'],
            settings.SALEMK3_ALPHA_BITS, settings.SALEMK3_VERSION,
        )
        if options['as_json']:
            return self.emit_json(AnalysisReportSerializer, report, ANALYSIS_REPORT_SCHEMA)

        salem, verdict = report.salem, report.verdict
        self.emit_lines([
            f"S = {args['polynomial']}",
            f"degree {salem.degree}, alpha = {salem.alpha}, S(1) = {salem.s_at_1}, S(-1) = {salem.s_at_minus1}",
            f"(C1) {'holds' if report.c1.holds else 'fails'}",
            f"ramification: {report.unramified}",
        ])
        for row in report.pi:
            if row.memberships:
                self.stdout.write(f"  Pi(S, Phi{row.m}) = {describe_memberships(row.memberships)}  [Res = {row.resultant}]")

        headline = f"verdict: {verdict.salem_pairs.value} [{verdict.tag.value}]"
        if verdict.salem_pairs == SalemPairsVerdict.REALIZABLE_ALL_ROOTS:
            self.stdout.write(self.style.SUCCESS(headline))
        elif verdict.salem_pairs == SalemPairsVerdict.UNKNOWN:
            self.stdout.write(self.style.WARNING(headline))
        else:
            self.stdout.write(self.style.ERROR(headline))
        self.emit_lines([
            f"any realization: {verdict.any_realization.value}, projective: {verdict.projective.value}",
            *(f"  witness: {w}" for w in verdict.certificate.witnesses),
            *(f"  sub-certificate: {tag.value}" for tag in verdict.certificate.sub_tags),
            *(f"  caveat: {c}" for c in verdict.caveats),
        ])
