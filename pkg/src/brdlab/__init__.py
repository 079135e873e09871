"""brdlab: a laboratory for random-order best-response dynamics on networks
with linear best responses and strategic substitutes."""

from .graphs import Graph, build_graph, parse_graph_spec
from .dynamics import DynamicsConfig, TrajectoryRecord, run, replay_schedule
from .spectral import eigenvalues_sym, lambda_min, stability_threshold
from .equilibria import solve_on_active_set, enumerate_stable_active_sets
from .sweeps import SweepSpec, sweep, preset, rows_to_csv

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "build_graph",
    "parse_graph_spec",
    "DynamicsConfig",
    "TrajectoryRecord",
    "run",
    "replay_schedule",
    "eigenvalues_sym",
    "lambda_min",
    "stability_threshold",
    "solve_on_active_set",
    "enumerate_stable_active_sets",
    "SweepSpec",
    "sweep",
    "preset",
    "rows_to_csv",
    "__version__",
]
