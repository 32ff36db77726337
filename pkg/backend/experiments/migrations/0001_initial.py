# Generated by Django 5.1 on 2026-10-17 09:12

import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ExperimentRun',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('family', models.CharField(help_text="Generator name, or 'file' for edge-list input", max_length=50)),
                ('instance', models.CharField(help_text='Generator arguments or input path', max_length=255)),
                ('seed', models.BigIntegerField(blank=True, null=True)),
                ('vertices', models.PositiveIntegerField()),
                ('edges', models.PositiveIntegerField()),
                ('nabla1', models.CharField(help_text='Assumed bound on the 1-shallow-minor density, as p/q', max_length=50)),
                ('params', models.JSONField(default=dict, help_text='k, alpha, ell, q, t and the t mode as rendered in the report')),
                ('nonconforming', models.BooleanField(default=False, help_text='Run used overridden ell, q or thresholds')),
                ('mode', models.CharField(choices=[('reference', 'Reference'), ('distributed', 'Distributed'), ('both', 'Both')], default='reference', max_length=20)),
                ('d1', models.PositiveIntegerField()),
                ('d2', models.PositiveIntegerField()),
                ('d3', models.PositiveIntegerField()),
                ('total', models.PositiveIntegerField()),
                ('rounds', models.PositiveIntegerField(blank=True, null=True)),
                ('gamma', models.PositiveIntegerField(blank=True, help_text='Exact domination number, when the exact oracle ran', null=True)),
                ('oracle_size', models.PositiveIntegerField()),
                ('oracle_method', models.CharField(choices=[('exact', 'Exact'), ('greedy', 'Greedy'), ('greedy-bound-only', 'Greedy (exact guard exceeded)')], max_length=20)),
                ('ratio', models.CharField(blank=True, help_text='Realized |D| / oracle size, as p/q', max_length=50)),
                ('factor', models.TextField(help_text='Theoretical approximation factor as a decimal string')),
                ('verdicts', models.JSONField(default=dict, help_text='Named bound check -> pass / fail / not-applicable')),
                ('passed', models.BooleanField(default=True)),
                ('elapsed', models.FloatField(help_text='Wall time in seconds')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Experiment Run',
                'verbose_name_plural': 'Experiment Runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
