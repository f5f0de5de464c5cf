"""Small-world network statistics, network entropy and entropy dating."""

from .dynamics import (
    DatingResult,
    RateResult,
    basal_rate,
    convert_rate,
    date_duration,
    exponential_rate,
    glotto_adjust,
    paper_linear_duration,
    per_daughter_rate,
    process_rate,
)
from .entropy import (
    Distribution,
    EntropyReport,
    conceptual_multiplier,
    eta,
    ideal_entropy,
    network_entropy,
    shannon_entropy,
    value_delta,
)
from .errors import NetEntropyError
from .generators import (
    ClusterHierarchy,
    complete_graph,
    nested_hierarchy,
    ring_lattice,
    verify_hierarchy,
    watts_strogatz,
)
from .graph import (
    Graph,
    connected_components,
    from_edge_list,
    largest_component,
    read_edge_list,
    write_edge_list,
)
from .metrics import (
    NetworkStats,
    average_path_length_exact,
    average_path_length_sampled,
    clustering_coefficient,
    network_stats,
)
from .replication import run_all

__version__ = "0.1.0"
