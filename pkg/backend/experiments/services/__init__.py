from .checks import (
    CHECKS,
    CheckContext,
    Verdict,
    evaluate_checks,
    gamma_lower_bound,
)

from .pipeline import (
    GREEDY_BOUND_ONLY,
    SUITES,
    ExperimentConfig,
    Instance,
    OracleChoice,
    RunReport,
    iter_instances,
    run_experiment,
    run_instance,
    run_oracle,
    search_counterexamples,
    seeded_arguments,
)

from .export import (
    ReportWriter,
    emit_report,
    export_to_csv,
    export_to_jsonl,
    parse_jsonl,
)

__all__ = [
    # Checks
    'CHECKS',
    'CheckContext',
    'Verdict',
    'evaluate_checks',
    'gamma_lower_bound',
    # Pipeline
    'GREEDY_BOUND_ONLY',
    'SUITES',
    'ExperimentConfig',
    'Instance',
    'OracleChoice',
    'RunReport',
    'iter_instances',
    'run_experiment',
    'run_instance',
    'run_oracle',
    'search_counterexamples',
    'seeded_arguments',
    # Export
    'ReportWriter',
    'emit_report',
    'export_to_csv',
    'export_to_jsonl',
    'parse_jsonl',
]
