"""Exponential-series homoclinic orbits of u'''' - b u'' + a u = f(u, u', u'', u''').

Construction pipeline: classify the linear spectrum, build the coefficient
recurrence tables, match the truncated series at z = 0 (all roots of the
amplitude polynomial), assemble the piecewise orbit, and verify it against
decay bounds, residual laws and an independent shooting integration.
"""

__version__ = "1.0.0"

from .errors import (
    ConfigError,
    DomainError,
    HomoclinicError,
    OracleError,
    ResonanceError,
    SolverError,
)
from .matching import RootCandidate, matching_polynomial_eval, rank_candidates, solve_matching
from .model import (
    JetValue,
    SystemParams,
    eval_nonlinearity,
    fixed_points,
    residual_at,
)
from .orbit import (
    HalfOrbit,
    HomoclinicOrbit,
    Side,
    make_orbit,
    sample,
    traveling_wave,
)
from .recurrence import CoefficientTable, TableKind, phi_table, psi_table
from .spectrum import (
    Region,
    Spectrum,
    char_roots,
    classify_by_eigenvalues,
    classify_region,
    resonance_poly,
    spectrum,
)
from .verify import (
    OracleResult,
    VerificationReport,
    compare,
    continuity_report,
    decay_check,
    ode_residual,
    real_orbit_residual,
    shooting_oracle,
)

__all__ = [
    "__version__",
    "ConfigError",
    "DomainError",
    "HomoclinicError",
    "OracleError",
    "ResonanceError",
    "SolverError",
    "RootCandidate",
    "matching_polynomial_eval",
    "rank_candidates",
    "solve_matching",
    "JetValue",
    "SystemParams",
    "eval_nonlinearity",
    "fixed_points",
    "residual_at",
    "HalfOrbit",
    "HomoclinicOrbit",
    "Side",
    "make_orbit",
    "sample",
    "traveling_wave",
    "CoefficientTable",
    "TableKind",
    "phi_table",
    "psi_table",
    "Region",
    "Spectrum",
    "char_roots",
    "classify_by_eigenvalues",
    "classify_region",
    "resonance_poly",
    "spectrum",
    "OracleResult",
    "VerificationReport",
    "compare",
    "continuity_report",
    "decay_check",
    "ode_residual",
    "real_orbit_residual",
    "shooting_oracle",
]
