"""Numerical verification of the generalized Redheffer inequality and the
8/pi^2 success bound of quantum phase estimation."""

from .errors import BracketError, DomainError, ResourceError
from .inequality import (
    ALPHA_2,
    ALPHA_T,
    QUARTER_PI,
    SUCCESS_BOUND,
    constants,
    corollary_lhs,
    f_infinity,
    f_log_derivative,
    f_partial,
    g_function,
    induction_step_lower_bound,
    induction_step_residual,
    margin,
)
from .qpe import (
    OutcomeDistribution,
    StateVector,
    SuccessReport,
    closed_form_prob,
    delta,
    inverse_qft,
    outcome_distribution,
    phase_state,
    qft,
    success_probability,
)
from .thresholds import (
    CorollaryReport,
    GScanReport,
    MarginReport,
    SolverConfig,
    ThresholdRow,
    alpha_threshold_numeric,
    beta_threshold,
    certify_inequality,
    concavity_check,
    corollary_scan,
    find_violation,
    g_scan,
    gamma_threshold,
    threshold_table,
)

__version__ = "0.1.0"
