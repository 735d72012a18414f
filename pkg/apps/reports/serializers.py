# apps/reports/serializers.py

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from apps.cyclotomic.polynomials import totient

from .exceptions import ParseError, TableFormatError
from .models import ScanFamily
from .parsing import read_poly_argument

# Integers at or beyond 2^53 lose precision in JSON readers that use doubles.
EXACT_JSON_LIMIT = 2 ** 53


class PolynomialField(serializers.Field):
    """Reads a polynomial expression or ``@file``; writes the canonical expression."""
    default_error_messages = {
        'invalid': 'Cannot parse polynomial: {error}',
        'unreadable': 'Cannot read {path}: {error}',
    }

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid', error='expected text')
        try:
            return read_poly_argument(data.strip())
        except (ParseError, TableFormatError) as exc:
            self.fail('invalid', error=exc)
        except OSError as exc:
            self.fail('unreadable', path=data.strip()[1:], error=exc.strerror)

    def to_representation(self, value):
        return str(value)


class BigIntegerField(serializers.Field):

    def to_representation(self, value):
        value = int(value)
        if abs(value) >= EXACT_JSON_LIMIT:
            return str(value)
        return value


# ----------------- Command argument serializers -----------------

class AnalyzeArgumentsSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    seed = serializers.IntegerField(min_value=0)
    m_cap = serializers.IntegerField(min_value=3)


class SalemCheckArgumentsSerializer(serializers.Serializer):
    action = serializers.ChoiceField(choices=[('check', 'Check')])
    polynomial = PolynomialField()


class PolynomialPairArgumentsSerializer(serializers.Serializer):
    f = PolynomialField()
    g = PolynomialField()
    seed = serializers.IntegerField(min_value=0, default=0)


class ObstructionArgumentsSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    s_plus = serializers.IntegerField(min_value=0, allow_null=True, default=None)
    s_minus = serializers.IntegerField(min_value=0, allow_null=True, default=None)
    seed = serializers.IntegerField(min_value=0, default=0)

    def validate(self, data):
        if (data['s_plus'] is None) != (data['s_minus'] is None):
            raise serializers.ValidationError("--s-plus and --s-minus must be given together.")
        return data


class KondoArgumentsSerializer(serializers.Serializer):
    m = serializers.IntegerField(allow_null=True, default=None)
    show_all = serializers.BooleanField(default=False)

    def validate(self, data):
        if (data['m'] is None) == (not data['show_all']):
            raise serializers.ValidationError("Give either an order m or --all.")
        return data


class PowerArgumentsSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    k = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0, default=0)
    m_cap = serializers.IntegerField(min_value=3)


class SignatureArgumentsSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    z = serializers.IntegerField(min_value=0, allow_null=True, default=None)
    seed = serializers.IntegerField(min_value=0, default=0)


class ScanArgumentsSerializer(serializers.Serializer):
    family = serializers.ChoiceField(choices=ScanFamily.choices)
    start = serializers.IntegerField()
    end = serializers.IntegerField()
    jobs = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0)
    m_cap = serializers.IntegerField(min_value=3)
    b_param = serializers.IntegerField(default=0)
    c_param = serializers.IntegerField(default=0)

    def validate(self, data):
        if data['end'] < data['start']:
            raise serializers.ValidationError({"end": "--to must not be smaller than --from."})
        return data


# ----------------- Report serializers -----------------

class MetaSerializer(serializers.Serializer):
    version = serializers.CharField()
    seed = serializers.IntegerField()


class SalemSummarySerializer(serializers.Serializer):
    degree = serializers.IntegerField()
    alpha = serializers.CharField()
    s_at_1 = BigIntegerField()
    s_at_minus1 = BigIntegerField()


class C1ReportSerializer(serializers.Serializer):
    f1_at_1 = BigIntegerField()
    f1_at_minus1 = BigIntegerField()
    abs_squares = serializers.ListField(child=serializers.BooleanField())
    signed_square = serializers.BooleanField()
    holds = serializers.BooleanField()


class PiMembershipSerializer(serializers.Serializer):
    p = serializers.IntegerField(source='prime')
    status = serializers.CharField()
    witness = serializers.CharField(allow_null=True)
    rule = serializers.CharField(allow_null=True)
    valuation = serializers.IntegerField(allow_null=True)
    common_factors = serializers.ListField(child=serializers.CharField())


class PiRowSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    resultant = BigIntegerField()
    primes = PiMembershipSerializer(many=True, source='memberships')


class VerdictSerializer(serializers.Serializer):
    salem_pairs = serializers.CharField()
    any_realization = serializers.CharField()
    projective = serializers.CharField()
    tag = serializers.CharField()
    witnesses = serializers.ListField(child=serializers.CharField(), source='certificate.witnesses')
    sub_tags = serializers.ListField(child=serializers.CharField(), source='certificate.sub_tags')
    unresolved_primes = serializers.ListField(child=serializers.IntegerField(), source='certificate.unresolved_primes')
    caveats = serializers.ListField(child=serializers.CharField())


class AnalysisReportSerializer(serializers.Serializer):
    input = serializers.CharField()
    salem = SalemSummarySerializer()
    c1 = C1ReportSerializer()
    unramified = serializers.CharField()
    pi = PiRowSerializer(many=True)
    verdict = VerdictSerializer()
    meta = MetaSerializer()


class SalemCheckReportSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    is_salem = serializers.BooleanField()
    reason = serializers.CharField(allow_null=True)
    salem = SalemSummarySerializer(allow_null=True)


class ResultantReportSerializer(serializers.Serializer):
    f = PolynomialField()
    g = PolynomialField()
    resultant = BigIntegerField()
    factors = serializers.ListField(child=serializers.ListField(child=BigIntegerField()))
    version = serializers.CharField()


class PiReportSerializer(serializers.Serializer):
    f = PolynomialField()
    g = PolynomialField()
    resultant = BigIntegerField()
    primes = PiMembershipSerializer(many=True, source='memberships')
    meta = MetaSerializer()


class ObstructionEdgeSerializer(serializers.Serializer):
    f = PolynomialField()
    g = PolynomialField()
    prime = serializers.IntegerField()
    rule = serializers.CharField()


class ObstructionGraphSerializer(serializers.Serializer):
    gf_rank = serializers.IntegerField()
    exactness = serializers.CharField()
    best_case_rank = serializers.IntegerField()
    d_plus = BigIntegerField()
    d_minus = BigIntegerField()
    nodes = serializers.ListField(child=PolynomialField())
    components = serializers.ListField(child=serializers.ListField(child=PolynomialField()))
    edges = ObstructionEdgeSerializer(many=True)
    indeterminate = ObstructionEdgeSerializer(many=True)


class ObstructionReportSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    s_plus = serializers.IntegerField()
    s_minus = serializers.IntegerField()
    graph = ObstructionGraphSerializer()
    meta = MetaSerializer()


class KondoClassSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    phi = serializers.SerializerMethodField()
    kind = serializers.CharField()
    reason = serializers.CharField()

    def get_phi(self, obj):
        return totient(obj.m)


class KondoReportSerializer(serializers.Serializer):
    sigma = serializers.ListField(child=serializers.IntegerField())
    omega = serializers.ListField(child=serializers.IntegerField())
    classes = KondoClassSerializer(many=True)


class PowerReportSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    k = serializers.IntegerField()
    power = PolynomialField()
    salem = SalemSummarySerializer()
    pi = PiRowSerializer(many=True)
    meta = MetaSerializer()


class SignatureAssignmentSerializer(serializers.Serializer):
    kind = serializers.CharField(source='descriptor.kind')
    factor = PolynomialField(source='descriptor.factor')
    index = serializers.IntegerField(source='descriptor.index', allow_null=True)
    r = serializers.IntegerField()
    s = serializers.IntegerField()


class ViolationSerializer(serializers.Serializer):
    clause = serializers.CharField()
    message = serializers.CharField()


class SignatureMapSerializer(serializers.Serializer):
    z = serializers.IntegerField()
    r = serializers.IntegerField()
    s = serializers.IntegerField()
    assignments = SignatureAssignmentSerializer(many=True)
    violations = ViolationSerializer(many=True)


class SignatureReportSerializer(serializers.Serializer):
    polynomial = PolynomialField()
    maps = SignatureMapSerializer(many=True)
    meta = MetaSerializer()


class RowsReportSerializer(serializers.Serializer):
    source = serializers.CharField()
    columns = serializers.ListField(child=serializers.CharField())
    rows = serializers.ListField(child=serializers.DictField())
    meta = MetaSerializer()


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')
