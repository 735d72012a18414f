# apps/reports/schema.py
"""Published JSON schemas (Draft 2020-12) for every --json report."""

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from apps.classifier.models import (
    AnyRealizationVerdict, KondoClassKind, ProjectiveVerdict, SalemPairsVerdict, TheoremTag,
)
from apps.obstruction.models import EdgeRule, Exactness, PiStatus

from .exceptions import SchemaViolation

DRAFT = 'https://json-schema.org/draft/2020-12/schema'

BIG_INTEGER = {'anyOf': [{'type': 'integer'}, {'type': 'string', 'pattern': r'^-?[0-9]+$'}]}
POLYNOMIAL = {'type': 'string', 'minLength': 1}
STRINGS = {'type': 'array', 'items': {'type': 'string'}}

META = {
    'type': 'object',
    'required': ['version', 'seed'],
    'properties': {
        'version': {'type': 'string'},
        'seed': {'type': 'integer', 'minimum': 0},
    },
}

SALEM = {
    'type': 'object',
    'required': ['degree', 'alpha', 's_at_1', 's_at_minus1'],
    'properties': {
        'degree': {'type': 'integer', 'minimum': 4},
        'alpha': {'type': 'string', 'pattern': r'^[0-9]+\.[0-9]{10}$'},
        's_at_1': BIG_INTEGER,
        's_at_minus1': BIG_INTEGER,
    },
}

PI_MEMBERSHIP = {
    'type': 'object',
    'required': ['p', 'status', 'witness'],
    'properties': {
        'p': {'type': 'integer', 'minimum': 2},
        'status': {'enum': PiStatus.values},
        'witness': {'type': ['string', 'null']},
        'rule': {'enum': EdgeRule.values + [None]},
        'valuation': {'type': ['integer', 'null']},
        'common_factors': STRINGS,
    },
}

PI_ROW = {
    'type': 'object',
    'required': ['m', 'primes'],
    'properties': {
        'm': {'type': 'integer', 'minimum': 3},
        'resultant': BIG_INTEGER,
        'primes': {'type': 'array', 'items': PI_MEMBERSHIP},
    },
}

VERDICT = {
    'type': 'object',
    'required': ['salem_pairs', 'any_realization', 'projective', 'tag', 'witnesses', 'caveats'],
    'properties': {
        'salem_pairs': {'enum': SalemPairsVerdict.values},
        'any_realization': {'enum': AnyRealizationVerdict.values},
        'projective': {'enum': ProjectiveVerdict.values},
        'tag': {'enum': TheoremTag.values},
        'witnesses': STRINGS,
        'sub_tags': {'type': 'array', 'items': {'enum': TheoremTag.values}},
        'unresolved_primes': {'type': 'array', 'items': {'type': 'integer'}},
        'caveats': STRINGS,
    },
}

ANALYSIS_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 analysis report',
    'type': 'object',
    'required': ['input', 'salem', 'c1', 'unramified', 'pi', 'verdict', 'meta'],
    'properties': {
        'input': {'type': 'string'},
        'salem': SALEM,
        'c1': {
            'type': 'object',
            'required': ['f1_at_1', 'f1_at_minus1', 'holds'],
            'properties': {
                'f1_at_1': BIG_INTEGER,
                'f1_at_minus1': BIG_INTEGER,
                'abs_squares': {'type': 'array', 'items': {'type': 'boolean'}, 'minItems': 2, 'maxItems': 2},
                'signed_square': {'type': 'boolean'},
                'holds': {'type': 'boolean'},
            },
        },
        'unramified': {'type': 'string', 'pattern': r'^(Unramified|Unknown|RamifiedAt\([0-9, ]+\))$'},
        'pi': {'type': 'array', 'items': PI_ROW},
        'verdict': VERDICT,
        'meta': META,
    },
}

SALEM_CHECK_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 Salem check',
    'type': 'object',
    'required': ['polynomial', 'is_salem', 'reason', 'salem'],
    'properties': {
        'polynomial': POLYNOMIAL,
        'is_salem': {'type': 'boolean'},
        'reason': {'type': ['string', 'null']},
        'salem': {'anyOf': [SALEM, {'type': 'null'}]},
    },
}

RESULTANT_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 resultant',
    'type': 'object',
    'required': ['f', 'g', 'resultant', 'factors', 'version'],
    'properties': {
        'f': POLYNOMIAL,
        'g': POLYNOMIAL,
        'resultant': BIG_INTEGER,
        'factors': {
            'type': 'array',
            'items': {'type': 'array', 'prefixItems': [BIG_INTEGER, {'type': 'integer', 'minimum': 1}], 'items': False},
        },
        'version': {'type': 'string'},
    },
}

PI_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 Pi set report',
    'type': 'object',
    'required': ['f', 'g', 'resultant', 'primes', 'meta'],
    'properties': {
        'f': POLYNOMIAL,
        'g': POLYNOMIAL,
        'resultant': BIG_INTEGER,
        'primes': {'type': 'array', 'items': PI_MEMBERSHIP},
        'meta': META,
    },
}

EDGE = {
    'type': 'object',
    'required': ['f', 'g', 'prime', 'rule'],
    'properties': {
        'f': POLYNOMIAL,
        'g': POLYNOMIAL,
        'prime': {'type': 'integer', 'minimum': 2},
        'rule': {'enum': EdgeRule.values},
    },
}

OBSTRUCTION_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 obstruction group report',
    'type': 'object',
    'required': ['polynomial', 's_plus', 's_minus', 'graph', 'meta'],
    'properties': {
        'polynomial': POLYNOMIAL,
        's_plus': {'type': 'integer', 'minimum': 0},
        's_minus': {'type': 'integer', 'minimum': 0},
        'graph': {
            'type': 'object',
            'required': ['gf_rank', 'exactness', 'best_case_rank', 'nodes', 'components', 'edges'],
            'properties': {
                'gf_rank': {'type': 'integer', 'minimum': 0},
                'exactness': {'enum': Exactness.values},
                'best_case_rank': {'type': 'integer', 'minimum': 0},
                'd_plus': BIG_INTEGER,
                'd_minus': BIG_INTEGER,
                'nodes': STRINGS,
                'components': {'type': 'array', 'items': STRINGS},
                'edges': {'type': 'array', 'items': EDGE},
                'indeterminate': {'type': 'array', 'items': EDGE},
            },
        },
        'meta': META,
    },
}

KONDO_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 Kondo classification',
    'type': 'object',
    'required': ['sigma', 'omega', 'classes'],
    'properties': {
        'sigma': {'type': 'array', 'items': {'type': 'integer'}},
        'omega': {'type': 'array', 'items': {'type': 'integer'}},
        'classes': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['m', 'phi', 'kind'],
                'properties': {
                    'm': {'type': 'integer', 'minimum': 3},
                    'phi': {'type': 'integer', 'minimum': 2, 'maximum': 20},
                    'kind': {'enum': KondoClassKind.values},
                    'reason': {'type': 'string'},
                },
            },
        },
    },
}

POWER_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 Salem power report',
    'type': 'object',
    'required': ['polynomial', 'k', 'power', 'salem', 'pi', 'meta'],
    'properties': {
        'polynomial': POLYNOMIAL,
        'k': {'type': 'integer', 'minimum': 1},
        'power': POLYNOMIAL,
        'salem': SALEM,
        'pi': {'type': 'array', 'items': PI_ROW},
        'meta': META,
    },
}

SIGNATURE_ASSIGNMENT = {
    'type': 'object',
    'required': ['kind', 'factor', 'index', 'r', 's'],
    'properties': {
        'kind': {'enum': ['Factor', 'UnitCirclePair', 'RealPair']},
        'factor': POLYNOMIAL,
        'index': {'type': ['integer', 'null'], 'minimum': 0},
        'r': {'type': 'integer', 'minimum': 0},
        's': {'type': 'integer', 'minimum': 0},
    },
}

SIGNATURE_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 signature map report',
    'type': 'object',
    'required': ['polynomial', 'maps', 'meta'],
    'properties': {
        'polynomial': POLYNOMIAL,
        'maps': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'required': ['z', 'r', 's', 'assignments', 'violations'],
                'properties': {
                    'z': {'type': 'integer', 'minimum': 0},
                    'r': {'type': 'integer', 'minimum': 0},
                    's': {'type': 'integer', 'minimum': 0},
                    'assignments': {'type': 'array', 'items': SIGNATURE_ASSIGNMENT},
                    'violations': {
                        'type': 'array',
                        'items': {
                            'type': 'object',
                            'required': ['clause', 'message'],
                            'properties': {'clause': {'type': 'string'}, 'message': {'type': 'string'}},
                        },
                    },
                },
            },
        },
        'meta': META,
    },
}

ROWS_REPORT_SCHEMA = {
    '$schema': DRAFT,
    'title': 'salemk3 scan or table report',
    'type': 'object',
    'required': ['source', 'columns', 'rows', 'meta'],
    'properties': {
        'source': {'type': 'string'},
        'columns': STRINGS,
        'rows': {'type': 'array', 'items': {'type': 'object'}},
        'meta': META,
    },
}


def validate_report(data, schema):
    error = best_match(Draft202012Validator(schema).iter_errors(data))
    if error is not None:
        where = '/'.join(str(part) for part in error.absolute_path) or '<root>'
        raise SchemaViolation(f"{schema.get('title', 'report')} at {where}: {error.message}")
