"""Quantized minimal surfaces: recursions for the catenoid, Enneper,
helicoid, hyperbola, and parabola families, their exact rational
structure, and finite matrix truncations with equation residuals."""

__version__ = "0.1.0"

from .exactmath import (  # noqa: F401
    ContractViolation,
    InputError,
    QmsError,
)
from .surfaces import (  # noqa: F401
    CatenoidSolution,
    HyperbolaParams,
    SigmaSequence,
    catenoid_build,
    catenoid_classify,
    catenoid_closed,
    enneper_sigma,
    helicoid_profile,
    hyperbola_r,
)
from .parabola import (  # noqa: F401
    ParabolaOrbit,
    ShootingResult,
    TauTable,
    tau_table,
    u_exact,
    v_iterate,
    vhat_bisect,
)
from .operators import (  # noqa: F401
    DenseMatrix,
    ResidualReport,
    ShiftOperator,
    embed,
    hym_residual,
    moment,
    schild_matrix,
    wz_residual,
    ym_residual,
)
from .torusdegree import (  # noqa: F401
    DegreeReport,
    UnitaryTuple,
    clock_shift,
    fuzzy_sphere,
    sphere_degree,
    torus_degree,
    unitary_schild,
)
