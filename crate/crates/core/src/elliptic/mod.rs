//! Divergence-form equations `div(a(‖∇u‖)/‖∇u‖·∇u) + C = 0` on ℍⁿ: exact radial
//! solutions, a finite-volume solver on polar grids of ℍ², and checks of the
//! comparison principle, gradient bounds and left invariance.

pub mod checks;
pub mod grid;
pub mod law;
pub mod radial;
pub mod solver;

pub use checks::{
    classify_decay, comparison_check, decay_scan, discrete_gradient, gradient_bound_check, interpolate,
    left_translate_check, translation_estimate_check, ComparisonReport, DecayClass, DecayMember, DecayRow,
    DecayTable, GradientBoundReport, TranslateReport, TranslationEstimateReport,
};
pub use grid::{AnnulusGrid, DiscreteField, GridKind};
pub use law::{FluxLaw, PLAPLACE_EPS};
pub use radial::{radial_solve, radial_solve_disk, RadialSolution};
pub use solver::{fd_solve, Method, Operator, SolverParams, Solved};
