import io
import json
import importlib
import os
import sys
import tempfile
from dataclasses import replace
from datetime import timedelta
from fractions import Fraction
from unittest.mock import patch

import factory
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from graphs.services import Graph, dump_edge_list, gen_grid, gen_twin_stars
from domination.services import (
    Mode,
    PhaseResult,
    exact_min_domset,
    greedy_domset,
    make_params,
    run_reference,
)
from experiments.management.commands.domset import APP_LOGGERS
from experiments.models import ExperimentRun
from experiments.serializers import ExperimentConfigSerializer, RunReportSerializer
from experiments.services import (
    CHECKS,
    GREEDY_BOUND_ONLY,
    CheckContext,
    ExperimentConfig,
    OracleChoice,
    ReportWriter,
    Verdict,
    emit_report,
    evaluate_checks,
    export_to_csv,
    export_to_jsonl,
    gamma_lower_bound,
    iter_instances,
    parse_jsonl,
    run_experiment,
    run_instance,
    run_oracle,
    search_counterexamples,
    seeded_arguments,
)


# =============================================================================
# Fixtures
# =============================================================================

def path(n):
    return Graph.from_edges(((i, i + 1) for i in range(n - 1)), range(n))


def grid_config(**overrides):
    return replace(ExperimentConfig(nabla1=Fraction(3), generator='grid', gen_args=('5', '5')), **overrides)


def single_report(**overrides):
    config = grid_config(**overrides)
    return run_instance(next(iter_instances(config)), config)


def without_elapsed(report):
    data = dict(RunReportSerializer(report).data)
    data.pop('elapsed')
    return data


class ExperimentRunFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = ExperimentRun

    family = factory.Faker('random_element', elements=['grid', 'triangulated_grid', 'twin_stars'])
    instance = factory.LazyFunction(lambda: '5 5')
    seed = factory.Faker('random_int', min=0, max=10_000)
    vertices = factory.Faker('random_int', min=1, max=500)
    edges = factory.LazyAttribute(lambda o: 2 * o.vertices)
    nabla1 = '3/1'
    params = factory.Dict({'k': 6, 'alpha': '1/6', 'ell': 865, 'q': 5184, 't': 3, 't_mode': 'exact'})
    d1 = 0
    d2 = 0
    d3 = factory.Faker('random_int', min=1, max=50)
    total = factory.LazyAttribute(lambda o: o.d1 + o.d2 + o.d3)
    oracle_size = factory.LazyAttribute(lambda o: o.total)
    oracle_method = ExperimentRun.OracleMethod.EXACT
    ratio = '1/1'
    factor = str(10 ** 40)
    verdicts = factory.Dict({'dominating': 'pass'})
    elapsed = factory.Faker('pyfloat', min_value=0, max_value=5)


# =============================================================================
# Check Tests
# =============================================================================

class EvaluateChecksTestCase(SimpleTestCase):
    """Tests for evaluate_checks"""

    def context(self, graph, params, oracle=None, **kwargs):
        return CheckContext(graph, params, run_reference(graph, params), oracle or exact_min_domset(graph), **kwargs)

    def test_every_check_reported(self):
        """Test one verdict per registered check"""
        graph = gen_grid(5, 5)
        verdicts = evaluate_checks(self.context(graph, make_params(3, graph)))
        self.assertEqual(list(verdicts), list(CHECKS))
        self.assertNotIn(Verdict.FAIL, verdicts.values())
        self.assertEqual(verdicts['dominating'], Verdict.PASS)
        self.assertEqual(verdicts['d1_le_2gamma'], Verdict.PASS)

    def test_reference_only(self):
        """Test protocol checks are not applicable without a distributed run"""
        graph = gen_grid(3, 3)
        verdicts = evaluate_checks(self.context(graph, make_params(3, graph)))
        self.assertEqual(verdicts['reference_distributed_agree'], Verdict.NOT_APPLICABLE)
        self.assertEqual(verdicts['round_budget'], Verdict.NOT_APPLICABLE)

    def test_protocol_checks(self):
        """Test agreement and round budget verdicts"""
        graph = gen_grid(3, 3)
        params = make_params(3, graph)
        agreed = evaluate_checks(self.context(graph, params, mode=Mode.BOTH, rounds=10, agreement=True))
        self.assertEqual(agreed['reference_distributed_agree'], Verdict.PASS)
        self.assertEqual(agreed['round_budget'], Verdict.PASS)
        disagreed = evaluate_checks(self.context(graph, params, mode=Mode.BOTH, rounds=11, agreement=False))
        self.assertEqual(disagreed['reference_distributed_agree'], Verdict.FAIL)
        self.assertEqual(disagreed['round_budget'], Verdict.FAIL)

    def test_overrides_skip_derived_constant_checks(self):
        """Test checks tied to the derived constants are not applicable under overrides"""
        graph = gen_twin_stars(5)
        verdicts = evaluate_checks(self.context(graph, make_params(1, t=3, ell=2, q=1, thresholds=(5, 5))))
        for name in ('pseudocover_count_bound', 'sequence_length_lt_t', 'approximation_factor', 'cleanup_undominated_neighbors'):
            self.assertEqual(verdicts[name], Verdict.NOT_APPLICABLE, name)
        self.assertEqual(verdicts['dominating'], Verdict.PASS)

    def test_greedy_oracle_skips_exact_checks(self):
        """Test gamma-relative checks need the exact oracle"""
        graph = gen_grid(4, 4)
        verdicts = evaluate_checks(self.context(graph, make_params(3, graph), oracle=greedy_domset(graph)))
        self.assertEqual(verdicts['d1_le_2gamma'], Verdict.NOT_APPLICABLE)
        self.assertEqual(verdicts['dprime_le_3gamma'], Verdict.NOT_APPLICABLE)
        self.assertEqual(verdicts['approximation_factor'], Verdict.PASS)

    def test_broken_result_fails(self):
        """Test an empty solution fails the domination check"""
        graph = path(3)
        result = PhaseResult(D1=frozenset(), D2=frozenset(), D3=frozenset(), dominated=frozenset())
        ctx = CheckContext(graph, make_params(1, graph), result, exact_min_domset(graph))
        verdicts = evaluate_checks(ctx)
        self.assertEqual(verdicts['dominating'], Verdict.FAIL)
        self.assertEqual(verdicts['phases_disjoint'], Verdict.PASS)

    def test_genuine_twin_star(self):
        """Test sequence, closure and cleanup bounds on the genuine gadget"""
        graph = gen_twin_stars(532)
        params = make_params(1, graph)
        ctx = self.context(graph, params, oracle=exact_min_domset(graph, guard=graph.order))
        self.assertEqual(ctx.dprime, {0, 1})
        verdicts = evaluate_checks(ctx)
        for name in (
            'sequence_length_lt_t',
            'sequence_meets_dprime',
            'd2_within_closure',
            'd2_size_bound',
            'cover_to_pseudocover',
            'plain_sequences_meet_dprime',
            'strong_vertex_bound',
            'cleanup_undominated_neighbors',
            'd3_size_bound',
        ):
            self.assertEqual(verdicts[name], Verdict.PASS, name)


class GammaLowerBoundTestCase(SimpleTestCase):
    """Tests for gamma_lower_bound"""

    def test_path(self):
        """Test greedy 3 on P9 with max degree 2 gives ceil(3 / H(3)) = 2"""
        graph = path(9)
        greedy = greedy_domset(graph)
        self.assertEqual(greedy.size, 3)
        self.assertEqual(gamma_lower_bound(graph, greedy), 2)

    def test_never_above_gamma(self):
        """Test the bound never exceeds the exact value"""
        for graph in (gen_grid(4, 5), gen_twin_stars(4, 3), path(11)):
            self.assertLessEqual(gamma_lower_bound(graph, greedy_domset(graph)), exact_min_domset(graph).size)

    def test_empty_graph(self):
        """Test the empty graph needs no dominators"""
        graph = Graph.from_edges([])
        self.assertEqual(gamma_lower_bound(graph, greedy_domset(graph)), 0)


# =============================================================================
# Pipeline Tests
# =============================================================================

class SeededArgumentsTestCase(SimpleTestCase):
    """Tests for seeded_arguments"""

    def test_appends_seed(self):
        """Test a missing seed argument comes from the config seed"""
        self.assertEqual(seeded_arguments('random_sparse', ('30', '3'), 4), (('30', '3', '4'), 4))

    def test_explicit_seed(self):
        """Test a seed given in the arguments is reported"""
        self.assertEqual(seeded_arguments('random_sparse', ('30', '3', '9'), None), (('30', '3', '9'), 9))

    def test_missing_seed(self):
        """Test a seeded family without any seed is an error"""
        with self.assertRaises(ValueError):
            seeded_arguments('random_sparse', ('30', '3'), None)

    def test_unseeded_family(self):
        """Test families without a seed are left alone"""
        self.assertEqual(seeded_arguments('grid', ('5', '5'), 3), (('5', '5'), None))


class IterInstancesTestCase(SimpleTestCase):
    """Tests for iter_instances"""

    def test_input_file(self):
        """Test an edge-list file becomes one instance"""
        with tempfile.TemporaryDirectory() as directory:
            name = os.path.join(directory, 'c4.txt')
            with open(name, 'w') as handle:
                handle.write("0 1\n1 2\n2 3\n3 0\n")
            instances = list(iter_instances(ExperimentConfig(nabla1=Fraction(1), input=name)))
        self.assertEqual(len(instances), 1)
        self.assertEqual(instances[0].family, 'file')
        self.assertEqual(instances[0].graph.size, 4)

    def test_missing_file(self):
        """Test an unreadable input raises OSError"""
        with self.assertRaises(OSError):
            list(iter_instances(ExperimentConfig(nabla1=Fraction(1), input='/nonexistent/graph.txt')))

    def test_smoke_suite(self):
        """Test the smoke suite covers every family"""
        instances = list(iter_instances(ExperimentConfig(suite='smoke')))
        self.assertEqual(len(instances), 10)
        self.assertEqual(
            {i.family for i in instances},
            {'grid', 'triangulated_grid', 'counterexample', 'twin_stars', 'random_sparse'},
        )

    def test_acceptance_suite_size(self):
        """Test the acceptance sweep has over a thousand instances"""
        from experiments.services.pipeline import acceptance_suite

        entries = list(acceptance_suite())
        self.assertGreaterEqual(len(entries), 1000)
        self.assertIn(('grid', ('100', '100')), {(e.family, e.arguments) for e in entries})


class RunOracleTestCase(SimpleTestCase):
    """Tests for run_oracle"""

    def test_exact(self):
        """Test small graphs get the exact oracle"""
        certificate, method = run_oracle(gen_grid(5, 5), OracleChoice.AUTO)
        self.assertEqual((certificate.size, method), (7, 'exact'))

    def test_guard_exceeded(self):
        """Test large graphs record the greedy bound only"""
        certificate, method = run_oracle(path(41), OracleChoice.EXACT)
        self.assertEqual(method, GREEDY_BOUND_ONLY)
        self.assertFalse(certificate.optimal)

    def test_greedy(self):
        """Test greedy is used when asked for"""
        _, method = run_oracle(gen_grid(3, 3), 'greedy')
        self.assertEqual(method, 'greedy')


class RunInstanceTestCase(SimpleTestCase):
    """Tests for run_instance"""

    def test_grid(self):
        """Test the 5x5 grid report"""
        report = single_report()
        self.assertEqual(report.gamma, 7)
        self.assertGreaterEqual(report.total, 7)
        self.assertEqual(report.verdicts['dominating'], Verdict.PASS)
        self.assertTrue(report.passed)
        self.assertGreaterEqual(report.ratio, 1)
        self.assertIsNone(report.rounds)

    def test_edgeless(self):
        """Test an edgeless graph takes every vertex with ratio 1"""
        report = single_report(generator='random_sparse', gen_args=('10', '0', '0'))
        self.assertEqual(report.total, 10)
        self.assertEqual(report.ratio, 1)

    def test_deterministic(self):
        """Test two runs agree except for wall time"""
        self.assertEqual(without_elapsed(single_report()), without_elapsed(single_report()))

    def test_distributed(self):
        """Test distributed mode records rounds and agreement"""
        report = single_report(mode=Mode.BOTH)
        self.assertEqual(report.rounds, 10)
        self.assertEqual(report.verdicts['reference_distributed_agree'], Verdict.PASS)

    def test_overrides_are_nonconforming(self):
        """Test override flags mark the report"""
        report = single_report(override_ell=2, override_q=1)
        self.assertTrue(report.nonconforming)
        self.assertEqual(report.verdicts['approximation_factor'], Verdict.NOT_APPLICABLE)


class RunExperimentTestCase(SimpleTestCase):
    """Tests for run_experiment"""

    def test_smoke_suite(self):
        """Test every smoke instance yields a dominating set"""
        reports = list(run_experiment(ExperimentConfig(suite='smoke')))
        self.assertEqual(len(reports), 10)
        for report in reports:
            self.assertEqual(report.verdicts['dominating'], Verdict.PASS)

    def test_callback_per_report(self):
        """Test on_report sees each report once"""
        seen = []
        reports = list(run_experiment(grid_config(), on_report=seen.append))
        self.assertEqual(seen, reports)

    def test_thread_pool_keeps_order(self):
        """Test concurrent instances come back in suite order"""
        sequential = [without_elapsed(r) for r in run_experiment(ExperimentConfig(suite='smoke'))]
        pooled = [without_elapsed(r) for r in run_experiment(ExperimentConfig(suite='smoke', workers=3))]
        self.assertEqual(pooled, sequential)


class SearchCounterexamplesTestCase(SimpleTestCase):
    """Tests for search_counterexamples"""

    def test_nothing_found(self):
        """Test small random graphs respect the cleanup bounds"""
        config = ExperimentConfig(nabla1=Fraction(2), generator='random_sparse', gen_args=('20', '2'))
        self.assertEqual(search_counterexamples(config, 3), [])

    def test_rejects_overrides(self):
        """Test the search runs with derived constants only"""
        config = ExperimentConfig(nabla1=Fraction(1), generator='random_sparse', gen_args=('20', '2'), override_q=1)
        with self.assertRaises(ValueError):
            search_counterexamples(config, 3)

    def test_rejects_unseeded_family(self):
        """Test families without a seed cannot be searched"""
        with self.assertRaises(ValueError):
            search_counterexamples(grid_config(), 3)


# =============================================================================
# Serializer Tests
# =============================================================================

class ExperimentConfigSerializerTestCase(SimpleTestCase):
    """Tests for ExperimentConfigSerializer"""

    def test_generator_config(self):
        """Test a minimal generator experiment"""
        serializer = ExperimentConfigSerializer(data={'generator': 'grid', 'gen_args': ['5', '5'], 'nabla1': '3/2'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()
        self.assertEqual(config.nabla1, Fraction(3, 2))
        self.assertEqual(config.gen_args, ('5', '5'))
        self.assertEqual(config.mode, Mode.REFERENCE)
        self.assertEqual(config.t, 'exact')

    def test_override_values(self):
        """Test string overrides become integers"""
        serializer = ExperimentConfigSerializer(data={
            'suite': 'smoke', 't': '4', 'override_ell': '2', 'override_thresholds': ['5', '3'],
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()
        self.assertEqual((config.t, config.override_ell, config.override_thresholds), (4, 2, (5, 3)))
        self.assertTrue(config.overridden)

    def test_sources(self):
        """Test exactly one instance source is required"""
        self.assertFalse(ExperimentConfigSerializer(data={'nabla1': '3'}).is_valid())
        self.assertFalse(ExperimentConfigSerializer(data={'nabla1': '3', 'suite': 'smoke', 'input': 'g.txt'}).is_valid())

    def test_nabla1_required(self):
        """Test a generator run needs nabla1"""
        serializer = ExperimentConfigSerializer(data={'generator': 'grid', 'gen_args': ['5', '5']})
        self.assertFalse(serializer.is_valid())
        self.assertIn('nabla1', serializer.errors)

    def test_invalid_values(self):
        """Test bad t, nabla1, mode and thresholds"""
        base = {'generator': 'grid', 'gen_args': ['5', '5'], 'nabla1': '3'}
        for bad in ({'t': '1'}, {'t': 'fast'}, {'nabla1': '-1'}, {'nabla1': 'x'},
                    {'mode': 'async'}, {'override_thresholds': ['0']}, {'generator': 'cube'}):
            self.assertFalse(ExperimentConfigSerializer(data={**base, **bad}).is_valid(), bad)


class RunReportSerializerTestCase(SimpleTestCase):
    """Tests for RunReportSerializer"""

    def test_column_order(self):
        """Test the fixed column order"""
        data = RunReportSerializer(single_report()).data
        self.assertEqual(list(data)[:6], ['family', 'instance', 'seed', 'vertices', 'edges', 'nabla1'])
        self.assertEqual(list(data)[-2:], ['verdicts', 'elapsed'])

    def test_rationals(self):
        """Test rationals render as p/q and the factor as a decimal string"""
        report = single_report()
        data = RunReportSerializer(report).data
        self.assertEqual(data['nabla1'], '3/1')
        self.assertEqual(data['alpha'], '1/6')
        self.assertEqual(data['factor'], str(report.params.factor))
        self.assertEqual(Fraction(data['ratio']), report.ratio)
        self.assertEqual(data['verdicts']['dominating'], 'pass')


# =============================================================================
# Export Tests
# =============================================================================

class ExportServiceTestCase(SimpleTestCase):
    """Tests for export service functions"""

    def setUp(self):
        self.report = single_report()
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def test_export_to_csv(self):
        """Test one report gives a header and one row"""
        lines = export_to_csv([self.report]).strip().split('\n')
        self.assertEqual(len(lines), 2)
        header = lines[0].split(',')
        self.assertIn('check_dominating', header)
        self.assertEqual(header[-1], 'elapsed')

    def test_export_empty(self):
        """Test no reports give no CSV"""
        self.assertEqual(export_to_csv([]), '')

    def test_jsonl_round_trip(self):
        """Test JSONL parses back to the serialized report"""
        parsed = parse_jsonl(export_to_jsonl([self.report, self.report]))
        self.assertEqual(parsed, [dict(RunReportSerializer(self.report).data)] * 2)

    def test_writer_flushes_each_row(self):
        """Test rows are on disk before the writer closes"""
        name = os.path.join(self.directory.name, 'runs.jsonl')
        writer = ReportWriter(name, 'jsonl')
        writer.write(self.report)
        with open(name) as handle:
            self.assertEqual(len(handle.read().splitlines()), 1)
        writer.close()

    def test_emit_csv(self):
        """Test a batch writes the header once"""
        name = os.path.join(self.directory.name, 'runs.csv')
        self.assertEqual(emit_report([self.report, self.report], name, 'csv'), 2)
        with open(name) as handle:
            self.assertEqual(len(handle.read().splitlines()), 3)

    def test_unwritable_path(self):
        """Test a missing directory raises OSError"""
        with self.assertRaises(OSError):
            ReportWriter(os.path.join(self.directory.name, 'missing', 'runs.csv'), 'csv')

    def test_unknown_format(self):
        """Test only csv and jsonl are accepted"""
        with self.assertRaises(ValueError):
            ReportWriter(os.path.join(self.directory.name, 'runs.xml'), 'xml')


# =============================================================================
# Model Tests
# =============================================================================

class ExperimentRunModelTestCase(TestCase):
    """Tests for ExperimentRun"""

    def test_factory(self):
        """Test the factory builds a consistent row"""
        run = ExperimentRunFactory()
        self.assertEqual(run.total, run.d3)
        self.assertIn(run.family, str(run))
        self.assertEqual(run.failed_checks, [])

    def test_failed_checks(self):
        """Test failed verdicts are listed"""
        run = ExperimentRunFactory(verdicts={'dominating': 'fail', 'phases_disjoint': 'pass'}, passed=False)
        self.assertEqual(run.failed_checks, ['dominating'])
        self.assertIn('fail', str(run))

    def test_from_report(self):
        """Test a report is stored with its rendered values"""
        report = single_report()
        run = ExperimentRun.from_report(report)
        run.refresh_from_db()
        self.assertEqual(run.family, 'grid')
        self.assertEqual(run.instance, '5 5')
        self.assertEqual(run.gamma, 7)
        self.assertEqual(run.params['k'], 6)
        self.assertEqual(run.params['alpha'], '1/6')
        self.assertEqual(int(run.factor), report.params.factor)
        self.assertEqual(run.verdicts['dominating'], 'pass')
        self.assertTrue(run.passed)

    def test_ordering(self):
        """Test newest rows come first"""
        first = ExperimentRunFactory()
        ExperimentRun.objects.filter(pk=first.pk).update(created_at=first.created_at - timedelta(minutes=1))
        second = ExperimentRunFactory()
        self.assertEqual(list(ExperimentRun.objects.all()), [second, first])


# =============================================================================
# Command Tests
# =============================================================================

class ProductionSettingsTestCase(SimpleTestCase):
    """Tests for the production settings module"""

    def test_app_loggers_write_to_file(self):
        """Test every app logger goes to the batch log file"""
        environment = {'SECRET_KEY': 'x', 'DATABASE_URL': 'sqlite:///batch.sqlite3'}
        with patch.dict(os.environ, environment):
            sys.modules.pop('sparsedom.settings.production', None)
            production = importlib.import_module('sparsedom.settings.production')
        for name in APP_LOGGERS:
            self.assertEqual(production.LOGGING['loggers'][name]['handlers'], ['file'], name)


class DomsetCommandTestCase(TestCase):
    """Tests for the domset management command"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def call(self, *args):
        out = io.StringIO()
        call_command('domset', *args, stdout=out)
        return out.getvalue()

    def test_run_generator(self):
        """Test a passing run reports success"""
        output = self.call('run', '--generator', 'grid', '--gen-args', '5', '5', '--nabla1', '3')
        self.assertIn('grid(5 5)', output)
        self.assertIn('passed every applicable check', output)

    def test_run_writes_report(self):
        """Test --report writes one CSV row per instance"""
        name = os.path.join(self.directory.name, 'out.csv')
        self.call('run', '--generator', 'grid', '--gen-args', '4', '4', '--nabla1', '3',
                  '--report', name, '--format', 'csv')
        with open(name) as handle:
            self.assertEqual(len(handle.read().splitlines()), 2)

    def test_run_records(self):
        """Test --record stores every report"""
        self.call('run', '--generator', 'grid', '--gen-args', '3', '3', '--nabla1', '3', '--record')
        self.assertEqual(ExperimentRun.objects.count(), 1)

    def test_config_file(self):
        """Test INI values are used and flags win over them"""
        name = os.path.join(self.directory.name, 'experiment.ini')
        with open(name, 'w') as handle:
            handle.write("[experiment]\ngenerator = grid\ngen-args = 3 3\nnabla1 = 0\nmode = both\n")
        output = self.call('run', '--config', name, '--nabla1', '3')
        self.assertIn('rounds=10', output)

    def test_usage_errors(self):
        """Test configuration problems exit with code 2"""
        for args in (
            ('run', '--nabla1', '3'),
            ('run', '--generator', 'grid', '--gen-args', '5', '5'),
            ('run', '--generator', 'grid', '--gen-args', '5', '--nabla1', '3'),
            ('run', '--input', '/nonexistent/graph.txt', '--nabla1', '3'),
            ('run', '--config', '/nonexistent/experiment.ini'),
            ('search', '--generator', 'grid', '--gen-args', '5', '5', '--nabla1', '3'),
            ('generate', 'cube'),
        ):
            with self.assertRaises(CommandError, msg=args) as caught:
                self.call(*args)
            self.assertEqual(caught.exception.returncode, 2, args)

    def test_unwritable_report(self):
        """Test an unwritable report path exits with code 2"""
        with self.assertRaises(CommandError) as caught:
            self.call('run', '--generator', 'grid', '--gen-args', '3', '3', '--nabla1', '3',
                      '--report', os.path.join(self.directory.name, 'missing', 'out.jsonl'))
        self.assertEqual(caught.exception.returncode, 2)

    def test_failed_check(self):
        """Test a failed bound check exits with code 1 after writing the report"""
        name = os.path.join(self.directory.name, 'out.jsonl')
        with patch('experiments.services.pipeline.evaluate_checks', return_value={'dominating': Verdict.FAIL}):
            with self.assertRaises(CommandError) as caught:
                self.call('run', '--generator', 'grid', '--gen-args', '3', '3', '--nabla1', '3', '--report', name)
        self.assertEqual(caught.exception.returncode, 1)
        with open(name) as handle:
            self.assertEqual(json.loads(handle.readline())['verdicts'], {'dominating': 'fail'})

    def test_generate(self):
        """Test generate prints the edge list"""
        self.assertEqual(self.call('generate', 'twin_stars', '--gen-args', '3', '1'), dump_edge_list(gen_twin_stars(3)))

    def test_generate_to_file(self):
        """Test generate --output writes the edge list"""
        name = os.path.join(self.directory.name, 'grid.txt')
        self.call('generate', 'random_sparse', '--gen-args', '20', '2', '--seed', '1', '--output', name)
        with open(name) as handle:
            self.assertTrue(handle.read().strip())

    def test_search(self):
        """Test a search without findings succeeds"""
        output = self.call('search', '--generator', 'random_sparse', '--gen-args', '20', '2',
                           '--nabla1', '2', '--count', '2')
        self.assertIn('No counterexample', output)
