//! Hyperbolic space as a solvable Lie group, with adjoint-norm estimates and
//! numerical checks for gradient bounds of geometric elliptic equations.
//!
//! * [`halfspace`]: upper half-space model, distances, geodesics, geodesic polar chart.
//! * [`group`]: the affine group `(t, s)` acting simply transitively, `Ad_g`, its
//!   operator norm and the ball maximum `max_{B_R} ‖Ad‖ = e^R`.
//! * [`killing`]: right-invariant (Killing) fields and the convexity of their
//!   squared length along geodesics.
//! * [`polar`]: the Laplacian in geodesic polar coordinates and a bounded
//!   harmonic function whose gradient decays like `C·e^{−R}`.
//! * [`elliptic`]: `div(a(|∇u|)/|∇u|·∇u) + C = 0` for linear, p-Laplace and
//!   minimal-surface laws; exact radial solutions, a finite-volume solver on
//!   polar grids, and comparison, gradient-bound, translation and decay checks.
//! * [`verify`]: the campaigns run by the `hyperlie-verify` binary.
//!
//! Runnable examples, one per capability:
//!
//! | example | shows |
//! |---|---|
//! | `halfspace_geodesics` | distances, unit-speed geodesics, polar chart |
//! | `group_adjoint` | group law, isometric action, `‖Ad_g‖`, sampled ball maximum |
//! | `killing_convexity` | critical points of `‖X‖²` along geodesics, Jacobi residual |
//! | `harmonic_counterexample` | `Δv = 0` and the decay indicator for `n = 2, 3, 4` |
//! | `radial_flux` | radial solutions, flux conservation, minimal-surface non-existence |
//! | `annulus_solver` | Newton and Gauss–Seidel solves, observed convergence order |
//! | `comparison_and_gradient_bound` | ordered data, `e^{2R}` gradient bound, translation estimate |
//! | `left_translation` | residuals of left-translated solutions |
//! | `decay_scan` | classification of `e^R·sup_{S_R}|∇u|` |

pub mod elliptic;
pub mod error;
pub mod group;
pub mod halfspace;
pub mod killing;
pub mod polar;
pub mod quadrature;
pub mod verify;

#[cfg(test)]
mod properties;
