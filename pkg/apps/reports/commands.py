# apps/reports/commands.py

import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from apps.classifier.exceptions import ClassifierError
from apps.cyclotomic.exceptions import CyclotomicConsistencyError
from apps.exact_poly.exceptions import PolynomialError
from apps.local_conditions.exceptions import LocalConditionError
from apps.modp.exceptions import ModularError
from apps.obstruction.exceptions import ObstructionError
from apps.obstruction.models import PiStatus
from apps.salem.exceptions import InternalDegeneracy, SalemError
from apps.signatures.exceptions import SignatureError

from .exceptions import ReportError, SchemaViolation
from .schema import validate_report
from .serializers import render_json

logger = logging.getLogger(__name__)

INPUT_ERROR = 2
INTERNAL_ERROR = 3

INTERNAL_ERRORS = (CyclotomicConsistencyError, InternalDegeneracy, SchemaViolation)
INPUT_ERRORS = (
    PolynomialError, ModularError, SalemError, LocalConditionError, ObstructionError, SignatureError,
    ClassifierError, ReportError, OSError,
)


def _validation_message(detail):
    if isinstance(detail, dict):
        return '; '.join(f"{key}: {_validation_message(value)}" for key, value in detail.items())
    if isinstance(detail, list):
        return ' '.join(_validation_message(item) for item in detail)
    return str(detail)


class SalemCommand(BaseCommand):
    """
    Base for the salemk3 commands. Subclasses implement ``run`` and declare
    ``arguments_serializer_class``; input problems exit with status 2 and
    internal inconsistencies with status 3.
    """
    arguments_serializer_class = None
    uses_seed = False

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', dest='as_json', help='Emit a JSON report.')
        if self.uses_seed:
            parser.add_argument('--seed', type=int, default=settings.SALEMK3_SEED, help='Seed for randomized factoring.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            self.run(options)
        except INTERNAL_ERRORS as exc:
            logger.error("internal inconsistency in %s: %s", self.__module__, exc)
            raise CommandError(f"Internal error: {exc}", returncode=INTERNAL_ERROR) from exc
        except serializers.ValidationError as exc:
            raise CommandError(_validation_message(exc.detail), returncode=INPUT_ERROR) from exc
        except INPUT_ERRORS as exc:
            raise CommandError(str(exc), returncode=INPUT_ERROR) from exc

    def run(self, options):
        raise NotImplementedError('subclasses of SalemCommand must provide a run() method')

    def validated(self, **data):
        serializer = self.arguments_serializer_class(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def emit_json(self, serializer_class, instance, schema):
        data = serializer_class(instance).data
        validate_report(data, schema)
        self.stdout.write(render_json(data))

    def emit_lines(self, lines):
        for line in lines:
            self.stdout.write(line)


def describe_memberships(memberships):
    """'{3, 13}' for the member primes, plus the undecided ones when present."""
    members = [str(entry.prime) for entry in memberships if entry.status == PiStatus.MEMBER]
    undecided = [str(entry.prime) for entry in memberships if entry.status == PiStatus.INDETERMINATE]
    text = '{' + ', '.join(members) + '}'
    if undecided:
        text += f", undecided at {', '.join(undecided)}"
    return text
