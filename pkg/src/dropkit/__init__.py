"""dropkit: numerical toolkit for the liquid drop model with a general Riesz repulsion.

Computes the closed-form ball quantities (critical mass, ball energies,
binding thresholds), verifies the scalar inequalities behind strict
binding on dense grids, evaluates perimeter and Riesz energy for
discretized shapes, optimizes planar shapes under a volume constraint,
and runs the nonexistence diagnostics.
"""

from .core import (
    EnergyBreakdown,
    RieszParams,
    UnsupportedRegimeError,
    energy_scale,
    unit_ball_volume,
    unit_sphere_area,
)
from .analytic import (
    BallConstants,
    ball_constants,
    ball_energy,
    ball_riesz_self_energy,
    conditional_threshold,
    critical_mass,
    crossing_mass,
)
from .inequalities import (
    BindingReport,
    LemmaGReport,
    binding_deficit_lower,
    binding_lower_bound,
    binding_scan,
    f_half_closed_form,
    f_min_certify,
    f_of_s,
    g_alpha,
    h_alpha,
    lemma_g_verify,
    uniqueness_gap,
)
from .shapes import FourierShape, GridShape, rasterize, rasterize_ball
from .quadrature import (
    layer_cake_check,
    moment_integral,
    perimeter_fourier,
    perimeter_grid,
    riesz_energy_grid,
    riesz_energy_mc,
    total_energy,
    unit_cell_pair_integral,
)
from .optimizer import OptimizationResult, optimize_shape, perturbation_curve
from .splits import (
    NecessaryConditionReport,
    SplitReport,
    angular_constant,
    best_split,
    necessary_condition,
    nonexistence_mass_bound,
    split_energy,
)

__version__ = "0.1.0"
