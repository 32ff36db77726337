from .params import (
    Params,
    TMode,
    make_params,
)

from .covers import (
    CoverDomainError,
    DominatorIndex,
    PseudoCover,
    alpha_strong,
    closure_P,
    cover_with_budget,
    dominators_P,
    enumerate_pseudocovers,
    is_pseudocover,
    pseudocover_from_cover,
    pseudocovers_of,
)

from .sequences import (
    DomSequence,
    enumerate_max_sequences,
    plain_sequences,
)

from .protocol import (
    ROUNDS,
    DistributedRun,
    DominatingSetProtocol,
    run_distributed,
)

from .phases import (
    Mode,
    ModeDisagreement,
    PhaseResult,
    PhaseStats,
    in_D1,
    phase1,
    phase2,
    phase3,
    run_full,
    run_reference,
)

from .oracles import (
    DomSetCertificate,
    OracleMethod,
    compute_Dhat,
    compute_Dprime,
    exact_min_domset,
    exhaustive_min_domset,
    greedy_domset,
    verify_dominating,
)

__all__ = [
    # Params
    'Params',
    'TMode',
    'make_params',
    # Covers and pseudo-covers
    'CoverDomainError',
    'DominatorIndex',
    'PseudoCover',
    'alpha_strong',
    'closure_P',
    'cover_with_budget',
    'dominators_P',
    'enumerate_pseudocovers',
    'is_pseudocover',
    'pseudocover_from_cover',
    'pseudocovers_of',
    # Sequences
    'DomSequence',
    'enumerate_max_sequences',
    'plain_sequences',
    # Distributed protocol
    'ROUNDS',
    'DistributedRun',
    'DominatingSetProtocol',
    'run_distributed',
    # Phases
    'Mode',
    'ModeDisagreement',
    'PhaseResult',
    'PhaseStats',
    'in_D1',
    'phase1',
    'phase2',
    'phase3',
    'run_full',
    'run_reference',
    # Oracles
    'DomSetCertificate',
    'OracleMethod',
    'compute_Dhat',
    'compute_Dprime',
    'exact_min_domset',
    'exhaustive_min_domset',
    'greedy_domset',
    'verify_dominating',
]
