from .engine import (
    Inbox,
    Message,
    NodeFlag,
    NodeState,
    Protocol,
    SimulationError,
    Trace,
    dump_trace,
    run,
)

from .protocols import (
    GatherBall,
    gather_ball,
    merge_stars,
)

__all__ = [
    # Engine
    'Inbox',
    'Message',
    'NodeFlag',
    'NodeState',
    'Protocol',
    'SimulationError',
    'Trace',
    'dump_trace',
    'run',
    # Protocols
    'GatherBall',
    'gather_ball',
    'merge_stars',
]
