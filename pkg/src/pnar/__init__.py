"""Poisson network autoregression (PNAR) for multivariate count time series.

Counts observed on the nodes of a fixed directed network are modelled with a
conditional Poisson intensity that regresses on each node's own lagged counts
(momentum effect) and on the average lagged counts of its neighbors (network
effect), with a linear or log-linear link.  The package provides:

- random network generators (stochastic block model, Erdos-Renyi) and
  diagnostics of the row-normalized weight matrix,
- copula-based joint count simulation with Poisson marginals,
- quasi-maximum likelihood fitting with sandwich standard errors,
- AIC/BIC/QIC model selection,
- two-step GEE refinement with analytic working-correlation inverses,
- parametric-bootstrap copula selection by weighted mean absolute error,
- a command line front end (``pnar --help``).
"""

from pnar.network import (
    Network,
    NetworkDiagnostics,
    build_network,
    diagnose_network,
    gen_er,
    gen_sbm,
    read_edge_list,
    write_edge_list,
)
from pnar.copulas import CopulaSpec, draw_counts, sample_uniforms
from pnar.model import (
    MomentSet,
    PnarSpec,
    StabilityReport,
    check_stability,
    intensity,
    unconditional_moments,
)
from pnar.simulate import (
    PanelData,
    correlation_decay_profile,
    empirical_noise_covariance,
    read_counts_csv,
    simulate,
    simulate_conditional,
    write_counts_csv,
)
from pnar.qmle import (
    FitResult,
    fit,
    hessian_and_information,
    quasi_loglik,
    score,
    wald_summary,
)
from pnar.selection import information_criteria, rank_models
from pnar.gee import WorkingCorrelation, estimate_tau, gee_fit, working_inverse_apply
from pnar.copula_boot import bootstrap_copula_select, wmae

__version__ = "0.1.0"

__all__ = [
    "Network",
    "NetworkDiagnostics",
    "build_network",
    "gen_sbm",
    "gen_er",
    "diagnose_network",
    "read_edge_list",
    "write_edge_list",
    "CopulaSpec",
    "sample_uniforms",
    "draw_counts",
    "PnarSpec",
    "StabilityReport",
    "MomentSet",
    "intensity",
    "check_stability",
    "unconditional_moments",
    "PanelData",
    "simulate",
    "simulate_conditional",
    "empirical_noise_covariance",
    "correlation_decay_profile",
    "read_counts_csv",
    "write_counts_csv",
    "FitResult",
    "quasi_loglik",
    "score",
    "hessian_and_information",
    "fit",
    "wald_summary",
    "information_criteria",
    "rank_models",
    "WorkingCorrelation",
    "estimate_tau",
    "working_inverse_apply",
    "gee_fit",
    "wmae",
    "bootstrap_copula_select",
    "__version__",
]
