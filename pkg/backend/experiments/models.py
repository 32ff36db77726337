import uuid
from django.db import models


class ExperimentRun(models.Model):
    """
    One finished instance of an experiment batch.

    Stores the rendered RunReport: instance descriptor, constants, phase
    sizes, oracle result and the verdict of every named bound check. Rows
    are written as instances finish, so an interrupted batch keeps every
    completed row.
    """
    class Mode(models.TextChoices):
        REFERENCE = 'reference', 'Reference'
        DISTRIBUTED = 'distributed', 'Distributed'
        BOTH = 'both', 'Both'

    class OracleMethod(models.TextChoices):
        EXACT = 'exact', 'Exact'
        GREEDY = 'greedy', 'Greedy'
        GREEDY_BOUND_ONLY = 'greedy-bound-only', 'Greedy (exact guard exceeded)'

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)

    # Instance descriptor
    family = models.CharField(
        max_length=50,
        help_text="Generator name, or 'file' for edge-list input"
    )
    instance = models.CharField(
        max_length=255,
        help_text="Generator arguments or input path"
    )
    seed = models.BigIntegerField(null=True, blank=True)
    vertices = models.PositiveIntegerField()
    edges = models.PositiveIntegerField()

    # Constants
    nabla1 = models.CharField(
        max_length=50,
        help_text="Assumed bound on the 1-shallow-minor density, as p/q"
    )
    params = models.JSONField(
        default=dict,
        help_text="k, alpha, ell, q, t and the t mode as rendered in the report"
    )
    nonconforming = models.BooleanField(
        default=False,
        help_text="Run used overridden ell, q or thresholds"
    )
    mode = models.CharField(
        max_length=20,
        choices=Mode.choices,
        default=Mode.REFERENCE,
    )

    # Result
    d1 = models.PositiveIntegerField()
    d2 = models.PositiveIntegerField()
    d3 = models.PositiveIntegerField()
    total = models.PositiveIntegerField()
    rounds = models.PositiveIntegerField(null=True, blank=True)

    # Oracle
    gamma = models.PositiveIntegerField(
        null=True,
        blank=True,
        help_text="Exact domination number, when the exact oracle ran"
    )
    oracle_size = models.PositiveIntegerField()
    oracle_method = models.CharField(
        max_length=20,
        choices=OracleMethod.choices,
    )
    ratio = models.CharField(
        max_length=50,
        blank=True,
        help_text="Realized |D| / oracle size, as p/q"
    )
    factor = models.TextField(
        help_text="Theoretical approximation factor as a decimal string"
    )

    verdicts = models.JSONField(
        default=dict,
        help_text="Named bound check -> pass / fail / not-applicable"
    )
    passed = models.BooleanField(default=True)
    elapsed = models.FloatField(help_text="Wall time in seconds")

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']
        verbose_name = "Experiment Run"
        verbose_name_plural = "Experiment Runs"

    def __str__(self):
        return f"{self.family}({self.instance}) |D|={self.total} ({'pass' if self.passed else 'fail'})"

    @property
    def failed_checks(self) -> list[str]:
        return [name for name, verdict in self.verdicts.items() if verdict == 'fail']

    @classmethod
    def from_report(cls, report):
        """Persist a RunReport as one row."""
        from .serializers import RunReportSerializer

        data = dict(RunReportSerializer(report).data)
        params = {key: data.pop(key) for key in ('k', 'alpha', 'ell', 'q', 't', 't_mode', 'thresholds')}
        return cls.objects.create(
            params=params,
            seed=data['seed'],
            family=data['family'],
            instance=data['instance'],
            vertices=data['vertices'],
            edges=data['edges'],
            nabla1=data['nabla1'],
            nonconforming=data['nonconforming'],
            mode=data['mode'],
            d1=data['d1'],
            d2=data['d2'],
            d3=data['d3'],
            total=data['total'],
            rounds=data['rounds'],
            gamma=data['gamma'],
            oracle_size=data['oracle_size'],
            oracle_method=data['oracle_method'],
            ratio=data['ratio'] or '',
            factor=data['factor'],
            verdicts=data['verdicts'],
            passed=report.passed,
            elapsed=data['elapsed'],
        )
