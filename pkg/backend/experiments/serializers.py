from fractions import Fraction

from rest_framework import serializers

from graphs.services import GENERATORS
from domination.services import Mode

from .services.checks import CHECKS
from .services.pipeline import SUITES, ExperimentConfig, OracleChoice


class RationalField(serializers.Field):
    """Exact rationals as "p/q" strings."""

    default_error_messages = {
        'invalid': 'Expected a rational such as 3, 3/2 or 1.5.',
        'positive': 'Must be positive.',
    }

    def __init__(self, positive=False, **kwargs):
        self.positive = positive
        super().__init__(**kwargs)

    def to_representation(self, value):
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"

    def to_internal_value(self, data):
        try:
            value = Fraction(str(data).strip())
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')
        if self.positive and value <= 0:
            self.fail('positive')
        return value


class BigIntegerStringField(serializers.Field):
    """Integers of any size as decimal strings."""

    def to_representation(self, value):
        return str(int(value))

    def to_internal_value(self, data):
        try:
            return int(data)
        except (TypeError, ValueError):
            raise serializers.ValidationError('Expected an integer.')


class ExperimentConfigSerializer(serializers.Serializer):
    """Validate a merged command-line / config-file experiment."""
    input = serializers.CharField(required=False, allow_null=True, default=None)
    generator = serializers.ChoiceField(choices=sorted(GENERATORS), required=False, allow_null=True, default=None)
    gen_args = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    suite = serializers.ChoiceField(choices=sorted(SUITES), required=False, allow_null=True, default=None)
    nabla1 = RationalField(positive=True, required=False, allow_null=True, default=None)
    t = serializers.CharField(required=False, default='exact')
    override_ell = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    override_q = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    override_thresholds = serializers.ListField(
        child=serializers.IntegerField(min_value=1),
        required=False,
        allow_null=True,
        allow_empty=False,
        default=None,
    )
    mode = serializers.ChoiceField(choices=[m.value for m in Mode], default=Mode.REFERENCE.value)
    oracle = serializers.ChoiceField(choices=[o.value for o in OracleChoice], default=OracleChoice.AUTO.value)
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True, default=None)
    workers = serializers.IntegerField(min_value=1, required=False, default=1)
    report = serializers.CharField(required=False, allow_null=True, default=None)
    format = serializers.ChoiceField(choices=['csv', 'jsonl'], default='jsonl')
    record = serializers.BooleanField(required=False, default=False)

    def validate_t(self, value):
        value = str(value).strip().lower()
        if value in ('exact', 'bound'):
            return value
        try:
            t = int(value)
        except ValueError:
            raise serializers.ValidationError("Expected 'exact', 'bound' or an integer >= 2.")
        if t < 2:
            raise serializers.ValidationError('t must be at least 2.')
        return t

    def validate(self, attrs):
        sources = [name for name in ('input', 'generator', 'suite') if attrs.get(name) is not None]
        if len(sources) != 1:
            raise serializers.ValidationError('Give exactly one of --input, --generator or --suite.')
        if attrs.get('suite') is None and attrs.get('nabla1') is None:
            raise serializers.ValidationError({'nabla1': 'Required unless a suite supplies it.'})
        if attrs.get('gen_args') and attrs.get('generator') is None:
            raise serializers.ValidationError({'gen_args': 'Only valid with --generator.'})
        return attrs

    def create(self, validated_data):
        data = dict(validated_data)
        data['gen_args'] = tuple(data.get('gen_args') or ())
        if data.get('override_thresholds') is not None:
            data['override_thresholds'] = tuple(data['override_thresholds'])
        data['mode'] = Mode(data['mode'])
        data['oracle'] = OracleChoice(data['oracle'])
        return ExperimentConfig(**data)


class RunReportSerializer(serializers.Serializer):
    """
    Fixed column order of a RunReport.

    Rationals render as "p/q" and the theoretical factor as a decimal
    string; CSV export flattens verdicts into one check_<name> column per
    registered check.
    """
    family = serializers.CharField()
    instance = serializers.CharField()
    seed = serializers.IntegerField(allow_null=True)
    vertices = serializers.IntegerField()
    edges = serializers.IntegerField()
    nabla1 = RationalField()
    k = serializers.IntegerField(source='params.k')
    alpha = RationalField(source='params.alpha')
    ell = serializers.IntegerField(source='params.ell')
    q = serializers.IntegerField(source='params.q')
    t = serializers.IntegerField(source='params.t')
    t_mode = serializers.CharField(source='params.t_mode')
    thresholds = serializers.ListField(child=serializers.IntegerField(), source='params.thresholds', allow_null=True)
    nonconforming = serializers.BooleanField()
    mode = serializers.CharField()
    d1 = serializers.IntegerField()
    d2 = serializers.IntegerField()
    d3 = serializers.IntegerField()
    total = serializers.IntegerField()
    rounds = serializers.IntegerField(allow_null=True)
    gamma = serializers.IntegerField(allow_null=True)
    oracle_size = serializers.IntegerField()
    oracle_method = serializers.CharField()
    ratio = RationalField(allow_null=True)
    factor = BigIntegerStringField()
    verdicts = serializers.DictField(child=serializers.CharField())
    elapsed = serializers.FloatField()


def report_to_flat_dict(data: dict) -> dict:
    """Flatten a serialized report for CSV: verdicts become check_<name> columns."""
    flat = {key: value for key, value in data.items() if key != 'verdicts'}
    thresholds = flat.get('thresholds')
    flat['thresholds'] = ' '.join(map(str, thresholds)) if thresholds else ''
    for name in CHECKS:
        flat[f'check_{name}'] = data['verdicts'].get(name, '')
    # wall time last
    flat['elapsed'] = flat.pop('elapsed')
    return flat
