"""
Management command for dominating-set experiments.

    manage.py domset run --generator grid --gen-args 5 5 --nabla1 3
    manage.py domset run --suite smoke --mode both --report out.csv --format csv
    manage.py domset generate twin_stars --gen-args 5 2
    manage.py domset search --generator random_sparse --gen-args 200 3 --nabla1 1 --count 50

Exit codes: 0 when every applicable bound check passed, 1 when one failed
(or the search found a counterexample), 2 on usage and I/O errors.
"""
import configparser
import logging

from django.core.management.base import BaseCommand, CommandError

from graphs.services import build_generator, dump_edge_list
from experiments.models import ExperimentRun
from experiments.serializers import ExperimentConfigSerializer
from experiments.services import (
    ReportWriter,
    run_experiment,
    search_counterexamples,
    seeded_arguments,
)

APP_LOGGERS = ('graphs', 'localsim', 'domination', 'experiments')

# Keys shared by the command line and the [experiment] section of --config
CONFIG_KEYS = (
    'input', 'generator', 'gen_args', 'suite', 'nabla1', 't',
    'override_ell', 'override_q', 'override_thresholds',
    'mode', 'oracle', 'seed', 'workers', 'report', 'format', 'record',
)
LIST_KEYS = ('gen_args', 'override_thresholds')

USAGE_ERROR = 2
CHECK_FAILURE = 1


class Command(BaseCommand):
    help = 'Runs dominating-set experiments, generates instances and searches for counterexamples'

    def add_arguments(self, parser):
        subcommands = parser.add_subparsers(dest='subcommand', required=True)

        run = subcommands.add_parser('run', help='Run the algorithm, the oracle and every bound check')
        self._add_experiment_arguments(run)
        run.add_argument('--report', help='Write reports to this path')
        run.add_argument('--format', choices=['csv', 'jsonl'], help='Report format (default jsonl)')
        run.add_argument('--record', action='store_true', default=None, help='Store every report in the database')

        generate = subcommands.add_parser('generate', help='Print a generated instance as an edge list')
        generate.add_argument('name', help='Generator name')
        generate.add_argument('--gen-args', dest='gen_args', nargs='*', default=[])
        generate.add_argument('--seed', type=int)
        generate.add_argument('--output', help='Write to this path instead of stdout')

        search = subcommands.add_parser('search', help='Search seeded instances for cleanup-bound counterexamples')
        self._add_experiment_arguments(search)
        search.add_argument('--count', type=int, default=20, help='Number of seeds to try')

    def _add_experiment_arguments(self, parser):
        parser.add_argument('--config', help='INI file with an [experiment] section; flags win over it')
        parser.add_argument('--input', help='Edge-list file')
        parser.add_argument('--generator', help='Generator name')
        parser.add_argument('--gen-args', dest='gen_args', nargs='+')
        parser.add_argument('--suite', help='Named instance sweep: smoke or acceptance')
        parser.add_argument('--nabla1', help='Assumed bound on the 1-shallow-minor density, e.g. 3 or 3/2')
        parser.add_argument('--t', dest='t', help="exact, bound or an integer >= 2")
        parser.add_argument('--override-ell', dest='override_ell')
        parser.add_argument('--override-q', dest='override_q')
        parser.add_argument('--override-thresholds', dest='override_thresholds', nargs='+')
        parser.add_argument('--mode', help='reference, distributed or both')
        parser.add_argument('--oracle', help='exact, greedy or auto')
        parser.add_argument('--seed')
        parser.add_argument('--workers', help='Instances run concurrently')

    def handle(self, *args, **options):
        if options['verbosity'] >= 3:
            for name in APP_LOGGERS:
                logging.getLogger(name).setLevel(logging.DEBUG)

        handler = getattr(self, f"_handle_{options['subcommand']}")
        return handler(options)

    # ------------------------------------------------------------------
    # Configuration

    def _load_config_file(self, path):
        parser = configparser.ConfigParser()
        try:
            found = parser.read(path, encoding='utf-8')
        except configparser.Error as exc:
            raise CommandError(f'Cannot parse config file {path}: {exc}', returncode=USAGE_ERROR)
        if not found:
            raise CommandError(f'Cannot read config file {path}', returncode=USAGE_ERROR)
        if not parser.has_section('experiment'):
            raise CommandError(f'Config file {path} has no [experiment] section', returncode=USAGE_ERROR)

        values = {}
        for key, value in parser.items('experiment'):
            key = key.replace('-', '_')
            if key not in CONFIG_KEYS:
                raise CommandError(f'Unknown key {key!r} in {path}', returncode=USAGE_ERROR)
            values[key] = value.split() if key in LIST_KEYS else value
        return values

    def _build_config(self, options):
        merged = self._load_config_file(options['config']) if options.get('config') else {}
        merged.update({key: options[key] for key in CONFIG_KEYS if options.get(key) is not None})

        serializer = ExperimentConfigSerializer(data=merged)
        if not serializer.is_valid():
            errors = '; '.join(
                f"{field}: {' '.join(str(m) for m in messages)}"
                for field, messages in serializer.errors.items()
            )
            raise CommandError(f'Invalid experiment: {errors}', returncode=USAGE_ERROR)
        return serializer.save()

    # ------------------------------------------------------------------
    # Subcommands

    def _handle_run(self, options):
        config = self._build_config(options)

        writer = None
        if config.report:
            try:
                writer = ReportWriter(config.report, config.format)
            except OSError as exc:
                raise CommandError(f'Cannot write report {config.report}: {exc}', returncode=USAGE_ERROR)

        def deliver(report):
            if writer is not None:
                writer.write(report)
            if config.record:
                ExperimentRun.from_report(report)

        failed = []
        count = 0
        try:
            for report in run_experiment(config, on_report=deliver):
                count += 1
                self._write_summary(report)
                if not report.passed:
                    failed.append(report)
        except (OSError, ValueError) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        finally:
            if writer is not None:
                writer.close()

        if failed:
            names = sorted({name for report in failed for name in report.failed_checks})
            raise CommandError(
                f'{len(failed)} of {count} instance(s) failed bound checks: {", ".join(names)}',
                returncode=CHECK_FAILURE,
            )
        self.stdout.write(self.style.SUCCESS(f'All {count} instance(s) passed every applicable check'))

    def _handle_generate(self, options):
        try:
            arguments, _ = seeded_arguments(options['name'], tuple(options['gen_args']), options['seed'])
            graph = build_generator(options['name'], arguments)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)

        text = dump_edge_list(graph)
        if options.get('output'):
            try:
                with open(options['output'], 'w', encoding='utf-8') as handle:
                    handle.write(text)
            except OSError as exc:
                raise CommandError(f"Cannot write {options['output']}: {exc}", returncode=USAGE_ERROR)
            self.stdout.write(f"Wrote {graph.order} vertices and {graph.size} edges to {options['output']}")
        else:
            self.stdout.write(text, ending='')

    def _handle_search(self, options):
        config = self._build_config(options)
        if options['count'] < 1:
            raise CommandError('--count must be positive', returncode=USAGE_ERROR)
        try:
            findings = search_counterexamples(config, options['count'])
        except ValueError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)

        if not findings:
            self.stdout.write(self.style.SUCCESS(f"No counterexample in {options['count']} seed(s)"))
            return
        for report in findings:
            self._write_summary(report)
        raise CommandError(f'Found {len(findings)} counterexample(s)', returncode=CHECK_FAILURE)

    # ------------------------------------------------------------------

    def _write_summary(self, report):
        ratio = f'{report.ratio.numerator}/{report.ratio.denominator}' if report.ratio is not None else '-'
        line = (
            f'{report.family}({report.instance}): |D|={report.total} '
            f'(D1={report.d1}, D2={report.d2}, D3={report.d3}) '
            f'oracle={report.oracle_size} [{report.oracle_method}] ratio={ratio}'
        )
        if report.rounds is not None:
            line += f' rounds={report.rounds}'
        if report.passed:
            self.stdout.write(self.style.SUCCESS(f'{line} ok'))
        else:
            self.stdout.write(self.style.ERROR(f'{line} FAILED {",".join(report.failed_checks)}'))
