from .graph import (
    Density,
    EdgeListError,
    Graph,
    GraphDomainError,
    ball,
    dump_edge_list,
    load_edge_list,
)

from .sparsity import (
    GuardExceeded,
    contract,
    degeneracy,
    densest_subgraph,
    find_biclique,
    min_t_no_biclique,
    nabla0_bruteforce,
    nabla0_exact,
    nabla1_bruteforce,
)

from .generators import (
    GENERATORS,
    build_generator,
    gen_counterexample,
    gen_grid,
    gen_random_sparse,
    gen_triangulated_grid,
    gen_twin_stars,
)

__all__ = [
    # Graph
    'Density',
    'EdgeListError',
    'Graph',
    'GraphDomainError',
    'ball',
    'dump_edge_list',
    'load_edge_list',
    # Sparsity
    'GuardExceeded',
    'contract',
    'degeneracy',
    'densest_subgraph',
    'find_biclique',
    'min_t_no_biclique',
    'nabla0_bruteforce',
    'nabla0_exact',
    'nabla1_bruteforce',
    # Generators
    'GENERATORS',
    'build_generator',
    'gen_counterexample',
    'gen_grid',
    'gen_random_sparse',
    'gen_triangulated_grid',
    'gen_twin_stars',
]
