"""
Experiment pipeline: instances in, RunReports out.

An experiment names its instances (an edge-list file, one generator call
or a named suite), the assumed nabla1 bound and how to run. Every instance
runs the reference phases, optionally the round protocol, an oracle and
all named bound checks.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import StrEnum
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Union

from django.conf import settings

from graphs.services import GENERATORS, Graph, GuardExceeded, build_generator, load_edge_list
from domination.services import (
    DomSetCertificate,
    Mode,
    Params,
    exact_min_domset,
    greedy_domset,
    make_params,
    run_distributed,
    run_reference,
)

from .checks import CheckContext, Verdict, evaluate_checks

logger = logging.getLogger(__name__)


class OracleChoice(StrEnum):
    EXACT = 'exact'
    GREEDY = 'greedy'
    AUTO = 'auto'


GREEDY_BOUND_ONLY = 'greedy-bound-only'

# Checks whose failure counts as a cleanup counterexample
CLEANUP_CHECKS = ('cleanup_undominated_neighbors', 'd3_size_bound')


@dataclass(frozen=True)
class ExperimentConfig:
    """A validated experiment; built by ExperimentConfigSerializer."""
    nabla1: Optional[Fraction] = None
    input: Optional[str] = None
    generator: Optional[str] = None
    gen_args: tuple[str, ...] = ()
    suite: Optional[str] = None
    t: Union[str, int] = 'exact'
    override_ell: Optional[int] = None
    override_q: Optional[int] = None
    override_thresholds: Optional[tuple[int, ...]] = None
    mode: Mode = Mode.REFERENCE
    oracle: OracleChoice = OracleChoice.AUTO
    seed: Optional[int] = None
    workers: int = 1
    report: Optional[str] = None
    format: str = 'jsonl'
    record: bool = False

    @property
    def overridden(self) -> bool:
        return any(v is not None for v in (self.override_ell, self.override_q, self.override_thresholds))


@dataclass(frozen=True)
class Instance:
    family: str
    arguments: tuple[str, ...]
    graph: Graph
    nabla1: Fraction
    seed: Optional[int] = None

    @property
    def descriptor(self) -> str:
        return f"{self.family}({', '.join(self.arguments)})"


@dataclass(frozen=True)
class RunReport:
    family: str
    instance: str
    seed: Optional[int]
    vertices: int
    edges: int
    params: Params
    mode: Mode
    d1: int
    d2: int
    d3: int
    rounds: Optional[int]
    oracle_size: int
    oracle_method: str
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def nabla1(self) -> Fraction:
        return self.params.nabla1

    @property
    def nonconforming(self) -> bool:
        return self.params.nonconforming

    @property
    def total(self) -> int:
        return self.d1 + self.d2 + self.d3

    @property
    def gamma(self) -> Optional[int]:
        return self.oracle_size if self.oracle_method == OracleChoice.EXACT else None

    @property
    def ratio(self) -> Optional[Fraction]:
        return Fraction(self.total, self.oracle_size) if self.oracle_size else None

    @property
    def factor(self) -> int:
        return self.params.factor

    @property
    def failed_checks(self) -> list[str]:
        return [name for name, verdict in self.verdicts.items() if verdict == Verdict.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failed_checks


# =============================================================================
# Instances
# =============================================================================

def seeded_arguments(family: str, arguments: tuple[str, ...], seed: Optional[int]) -> tuple[tuple[str, ...], Optional[int]]:
    """Append the seed when the family takes one and it was left off."""
    spec = GENERATORS.get(family)
    names = [name for name, _ in spec.arguments] if spec is not None else []
    if not names or names[-1] != 'seed':
        return arguments, None
    if len(arguments) == len(names) - 1:
        if seed is None:
            raise ValueError(f"{family} needs a seed; pass --seed or add it to --gen-args")
        arguments = (*arguments, str(seed))
    if len(arguments) == len(names):
        return arguments, int(arguments[-1])
    return arguments, seed


@dataclass(frozen=True)
class SuiteEntry:
    family: str
    arguments: tuple[str, ...]
    nabla1: Fraction


def _entry(family: str, nabla1, *arguments) -> SuiteEntry:
    return SuiteEntry(family, tuple(str(a) for a in arguments), Fraction(nabla1))


def smoke_suite() -> Iterator[SuiteEntry]:
    """A handful of instances from every family; runs in seconds."""
    yield _entry('grid', 3, 5, 5)
    yield _entry('triangulated_grid', 3, 4, 4)
    yield _entry('counterexample', 3, 2, 3)
    yield _entry('twin_stars', 1, 5, 2)
    yield _entry('random_sparse', 1, 10, 0, 0)
    for seed in range(5):
        yield _entry('random_sparse', 3, 30, 3, seed)


def acceptance_suite() -> Iterator[SuiteEntry]:
    """The full desk-scale sweep over every family (over a thousand instances)."""
    for w in range(2, 51):
        yield _entry('grid', 3, w, w)
        yield _entry('grid', 3, w, w // 2 + 1)
    yield _entry('grid', 3, 100, 100)
    for w in range(2, 31):
        yield _entry('triangulated_grid', 3, w, w)
        yield _entry('triangulated_grid', 3, w, w // 2 + 1)
    for gamma in range(1, 7):
        for m in range(1, 11):
            yield _entry('counterexample', gamma + 1, gamma, m)
    for d in (3, 5, 10, 532):
        for copies in (1, 2, 3):
            yield _entry('twin_stars', 1, d, copies)
    for n in (20, 30, 40, 100, 200, 500):
        for d in range(1, 6):
            for seed in range(30):
                yield _entry('random_sparse', d, n, d, seed)


SUITES: dict[str, Callable[[], Iterator[SuiteEntry]]] = {
    'smoke': smoke_suite,
    'acceptance': acceptance_suite,
}


def iter_instances(config: ExperimentConfig) -> Iterator[Instance]:
    """
    Instances named by the config, built lazily.

    Raises:
        OSError: unreadable input file
        EdgeListError: malformed input file
        ValueError: unknown generator or suite, bad generator arguments
    """
    if config.input is not None:
        graph = load_edge_list(Path(config.input).read_text())
        yield Instance('file', (config.input,), graph, config.nabla1)
        return

    if config.generator is not None:
        arguments, seed = seeded_arguments(config.generator, tuple(config.gen_args), config.seed)
        graph = build_generator(config.generator, arguments)
        yield Instance(config.generator, arguments, graph, config.nabla1, seed)
        return

    try:
        entries = SUITES[config.suite]()
    except KeyError:
        raise ValueError(f"Unknown suite {config.suite!r}; choose from {', '.join(SUITES)}") from None
    for entry in entries:
        nabla1 = config.nabla1 if config.nabla1 is not None else entry.nabla1
        arguments, seed = seeded_arguments(entry.family, entry.arguments, None)
        yield Instance(entry.family, arguments, build_generator(entry.family, arguments), nabla1, seed)


# =============================================================================
# Running
# =============================================================================

def run_oracle(G: Graph, choice: OracleChoice | str) -> tuple[DomSetCertificate, str]:
    """
    The oracle certificate and the method name recorded in the report.

    exact and auto fall back to greedy above DOMSET_EXACT_GUARD and record
    'greedy-bound-only'.
    """
    choice = OracleChoice(choice)
    if choice == OracleChoice.GREEDY:
        return greedy_domset(G), OracleChoice.GREEDY.value
    try:
        return exact_min_domset(G), OracleChoice.EXACT.value
    except GuardExceeded as exc:
        if choice == OracleChoice.EXACT:
            logger.warning(f"{exc}; recording greedy bound only")
        return greedy_domset(G), GREEDY_BOUND_ONLY


def run_instance(instance: Instance, config: ExperimentConfig) -> RunReport:
    """Run phases, optional protocol, oracle and checks on one instance."""
    started = time.perf_counter()
    G = instance.graph
    params = make_params(
        instance.nabla1,
        G,
        t=config.t,
        ell=config.override_ell,
        q=config.override_q,
        thresholds=config.override_thresholds,
    )

    result = run_reference(G, params, workers=1)
    rounds, agreement = None, None
    if Mode(config.mode) != Mode.REFERENCE:
        distributed = run_distributed(G, params, workers=1)
        rounds = distributed.rounds
        agreement = distributed.sets == result.sets
        if not agreement:
            logger.error(
                f"{instance.descriptor}: reference sizes {tuple(map(len, result.sets))} "
                f"but distributed {tuple(map(len, distributed.sets))}"
            )

    oracle, method = run_oracle(G, config.oracle)
    ctx = CheckContext(G, params, result, oracle, Mode(config.mode), rounds, agreement)
    verdicts = evaluate_checks(ctx)

    report = RunReport(
        family=instance.family,
        instance=' '.join(instance.arguments),
        seed=instance.seed,
        vertices=G.order,
        edges=G.size,
        params=params,
        mode=Mode(config.mode),
        d1=len(result.D1),
        d2=len(result.D2),
        d3=len(result.D3),
        rounds=rounds,
        oracle_size=oracle.size,
        oracle_method=method,
        verdicts=verdicts,
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        f"{instance.descriptor}: |D|={report.total} ({report.d1}+{report.d2}+{report.d3}) "
        f"oracle={report.oracle_size} [{method}] {'ok' if report.passed else 'FAILED ' + ','.join(report.failed_checks)}"
    )
    return report


def run_experiment(
    config: ExperimentConfig,
    on_report: Optional[Callable[[RunReport], None]] = None,
) -> Iterator[RunReport]:
    """
    Run every instance of the experiment, yielding reports in instance order.

    With workers > 1 instances run on a thread pool; on_report is always
    called from the consuming thread, so a single writer sees the rows one
    at a time.
    """
    instances = iter_instances(config)
    workers = config.workers or settings.DOMSET_WORKERS

    def deliver(reports: Iterable[RunReport]) -> Iterator[RunReport]:
        for report in reports:
            if on_report is not None:
                on_report(report)
            yield report

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            yield from deliver(executor.map(lambda instance: run_instance(instance, config), instances))
    else:
        yield from deliver(run_instance(instance, config) for instance in instances)


def search_counterexamples(config: ExperimentConfig, count: int) -> list[RunReport]:
    """
    Look for instances where the cleanup bounds fail under derived constants.

    Runs the reference pipeline on seeds 0..count-1 of a seeded generator
    and returns the reports in which a cleanup check failed.

    Raises:
        ValueError: overrides given, or the generator takes no seed
    """
    if config.overridden:
        raise ValueError("Counterexample search runs with the derived constants only")
    if config.generator is None:
        raise ValueError("Counterexample search needs a generator")
    names = [name for name, _ in GENERATORS[config.generator].arguments]
    if names[-1] != 'seed':
        raise ValueError(f"{config.generator} takes no seed")

    findings = []
    for seed in range(count):
        seeded = replace(config, seed=seed, mode=Mode.REFERENCE, gen_args=tuple(config.gen_args)[:len(names) - 1])
        for report in run_experiment(seeded):
            if any(report.verdicts.get(name) == Verdict.FAIL for name in CLEANUP_CHECKS):
                findings.append(report)
    logger.info(f"search over {count} seed(s) of {config.generator}: {len(findings)} finding(s)")
    return findings
