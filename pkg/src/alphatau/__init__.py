"""Exact tools for triangle-independent sets, bipartization and the
recursive cut procedure on triangle-free trigraphs."""

__version__ = "0.1.0"

from .core import (
    Graph,
    Partition,
    Trigraph,
    cut_counts,
    edge_label,
    from_graph_and_tis,
    induced,
    validate,
)
from .counts import config_counts, f_pair_sum, f_total, f_value
from .cut import derandomized_cut, exact_expectation, exhaustive_distribution, random_cut
from .extremal import (
    JoinSpec,
    clebsch,
    clebsch_trigraph,
    is_join_of_cbb,
    make_cjoin_trigraph,
    make_join,
    recognize_cjoin,
)
from .oracles import alpha1, ctau_scan, tau1, tau2, tau_b
from .sweeps import sweep_theorem, sweep_trigraph

__all__ = [
    "Graph", "Partition", "Trigraph", "cut_counts", "edge_label", "from_graph_and_tis",
    "induced", "validate", "config_counts", "f_pair_sum", "f_total", "f_value",
    "derandomized_cut", "exact_expectation", "exhaustive_distribution", "random_cut",
    "alpha1", "tau1", "tau2", "tau_b", "ctau_scan",
    "JoinSpec", "clebsch", "clebsch_trigraph", "is_join_of_cbb", "make_cjoin_trigraph",
    "make_join", "recognize_cjoin", "sweep_theorem", "sweep_trigraph",
]
