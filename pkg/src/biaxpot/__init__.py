"""Born-Infeld two-charge axial potentials, asymptotics, and spectra."""

from .fields import (
    AxialConfig,
    FieldVector,
    Point3,
    SingularityError,
    axial_field,
    curl_probe,
    curl_probe_richardson,
    d_c,
    f_bi,
    integrand_inner,
    integrand_outer,
)
from .potentials import (
    PotentialKind,
    PotentialSample,
    effective_potential,
    phi_at_electron,
    phi_def1_axial,
    phi_def2_axial,
    phi_minus_infinity,
    phi_tilde_at_electron,
    single_particle_potential,
)
from .quadrature import (
    IntegrandEvaluationError,
    QuadratureConvergenceError,
    QuadratureError,
    QuadratureResult,
    TailDecayError,
    Tolerance,
    integrate_finite,
    integrate_semi_infinite,
)
from .specfun import C_BETA_QUARTER, SpecialConstantC, beta, gamma, log_gamma
from .spectrum import (
    BoundStateShortfallError,
    EigenLevel,
    LevelSpread,
    PotentialTable,
    RadialProblem,
    build_potential_table,
    solve_levels,
    spectrum_spread,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"
