//! Verification harness on solved or sampled discrete fields.

use super::grid::{check_field, AnnulusGrid, DiscreteField, GridKind};
use super::law::FluxLaw;
use super::solver::Operator;
use crate::error::SolveError;
use crate::group::GElem;
use crate::halfspace::{distance, polar_chart_inv};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

fn ghost_aware(grid: &AnnulusGrid, u: &DiscreteField, i: isize, j: isize) -> f64 {
    let nt = grid.ntheta() as isize;
    if i < 0 {
        return u.get(0, (j + nt / 2).rem_euclid(nt) as usize);
    }
    u.get(i as usize, j.rem_euclid(nt) as usize)
}

/// `‖∇u‖` at every node: central differences inside, second-order one-sided
/// radial differences on boundary rings, periodic central differences in `θ`.
pub fn discrete_gradient(u: &DiscreteField, grid: &AnnulusGrid) -> DiscreteField {
    assert!(u.matches(grid), "field does not match grid");
    let (hr, ht) = (grid.hr(), grid.htheta());
    let nr = grid.nr() as isize;
    let mut out = DiscreteField::zeros(grid);
    for i in 0..=grid.nr() {
        let ii = i as isize;
        let s = grid.r(i).sinh();
        for j in 0..grid.ntheta() {
            let jj = j as isize;
            let at = |a: isize, b: isize| ghost_aware(grid, u, a, b);
            let ur = if ii == nr {
                (3.0 * at(ii, jj) - 4.0 * at(ii - 1, jj) + at(ii - 2, jj)) / (2.0 * hr)
            } else if ii == 0 && grid.kind() == GridKind::Annulus {
                (-3.0 * at(0, jj) + 4.0 * at(1, jj) - at(2, jj)) / (2.0 * hr)
            } else {
                (at(ii + 1, jj) - at(ii - 1, jj)) / (2.0 * hr)
            };
            let ut = (at(ii, jj + 1) - at(ii, jj - 1)) / (2.0 * ht);
            out.set(i, j, (ur * ur + (ut / s).powi(2)).sqrt());
        }
    }
    out
}

/// Outcome of a discrete comparison test.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    /// `min (v − u)` over all nodes.
    pub min_margin: f64,
    /// `(ring, angle)` of the first node attaining the minimum.
    pub location: (usize, usize),
    pub tol: f64,
    pub pass: bool,
}

/// Checks `u ≤ v` everywhere given `u ≤ v` on the boundary rings.
pub fn comparison_check(
    u: &DiscreteField,
    v: &DiscreteField,
    grid: &AnnulusGrid,
    tol: f64,
) -> Result<ComparisonReport, SolveError> {
    check_field(grid, u)?;
    check_field(grid, v)?;
    for i in grid.boundary_rings() {
        for j in 0..grid.ntheta() {
            if u.get(i, j) > v.get(i, j) {
                return Err(SolveError::Precondition(format!(
                    "boundary data not ordered at ring {i}, angle {j}"
                )));
            }
        }
    }
    let mut min_margin = f64::INFINITY;
    let mut location = (0, 0);
    for i in 0..grid.rings() {
        for j in 0..grid.ntheta() {
            let m = v.get(i, j) - u.get(i, j);
            if m < min_margin {
                min_margin = m;
                location = (i, j);
            }
        }
    }
    Ok(ComparisonReport {
        min_margin,
        location,
        tol,
        pass: min_margin >= -tol,
    })
}

/// Interior versus boundary gradient sizes against the translated-domain bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientBoundReport {
    pub g_int: f64,
    pub g_bd: f64,
    pub int_location: (usize, usize),
    pub bd_location: (usize, usize),
    /// `(max_{B_R} ‖Ad‖)² = e^{2R}`.
    pub factor: f64,
    /// `10·h²`.
    pub allowance: f64,
    /// `G_int / (e^R·G_bd)`, recorded but not asserted.
    pub single_factor_ratio: f64,
    pub pass: bool,
}

/// `G_int ≤ e^{2R}·G_bd + 10h²` for a field on a grid inside the ball `B_R` about `e`.
pub fn gradient_bound_check(u: &DiscreteField, grid: &AnnulusGrid, r_ball: f64) -> Result<GradientBoundReport, SolveError> {
    check_field(grid, u)?;
    if grid.r_outer() > r_ball * (1.0 + 1e-12) {
        return Err(SolveError::Precondition(format!(
            "grid radius {} exceeds ball radius {r_ball}",
            grid.r_outer()
        )));
    }
    let grad = discrete_gradient(u, grid);
    let (mut g_int, mut g_bd) = (0.0f64, 0.0f64);
    let (mut int_location, mut bd_location) = ((0, 0), (0, 0));
    let mut have_int = false;
    let mut have_bd = false;
    for i in 0..grid.rings() {
        for j in 0..grid.ntheta() {
            let g = grad.get(i, j);
            if grid.is_boundary(i) {
                if !have_bd || g > g_bd {
                    g_bd = g;
                    bd_location = (i, j);
                    have_bd = true;
                }
            } else if !have_int || g > g_int {
                g_int = g;
                int_location = (i, j);
                have_int = true;
            }
        }
    }
    let factor = (2.0 * r_ball).exp();
    let allowance = 10.0 * grid.h().powi(2);
    let single_factor_ratio = if g_bd > 0.0 {
        g_int / (r_ball.exp() * g_bd)
    } else if g_int == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(GradientBoundReport {
        g_int,
        g_bd,
        int_location,
        bd_location,
        factor,
        allowance,
        single_factor_ratio,
        pass: g_int <= factor * g_bd + allowance,
    })
}

/// Cubic Lagrange weights on nodes `−1, 0, 1, 2` at offset `t`.
fn cubic_weights(t: f64) -> [f64; 4] {
    [
        -t * (t - 1.0) * (t - 2.0) / 6.0,
        (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0,
        -(t + 1.0) * t * (t - 2.0) / 2.0,
        (t + 1.0) * t * (t - 1.0) / 6.0,
    ]
}

/// Bicubic interpolation of `u` at polar `(r, θ)`; `None` if the 4×4 stencil leaves the grid.
pub fn interpolate(u: &DiscreteField, grid: &AnnulusGrid, r: f64, theta: f64) -> Option<f64> {
    let x = grid.ring_coordinate(r);
    let i0 = x.floor();
    let lowest = if grid.kind() == GridKind::Disk { -1.0 } else { 0.0 };
    if !(i0 - 1.0 >= lowest && i0 + 2.0 <= grid.nr() as f64) {
        return None;
    }
    let y = theta / grid.htheta();
    let j0 = y.floor();
    let (wr, wt) = (cubic_weights(x - i0), cubic_weights(y - j0));
    let (i0, j0) = (i0 as isize, j0 as isize);
    let mut acc = 0.0;
    for (a, wa) in wr.iter().enumerate() {
        let mut row = 0.0;
        for (b, wb) in wt.iter().enumerate() {
            row += wb * ghost_aware(grid, u, i0 - 1 + a as isize, j0 - 1 + b as isize);
        }
        acc += wa * row;
    }
    Some(acc)
}

/// Residual of the left-translated field `u_z = u∘L_z` on the overlap `Ω ∩ Ω_z`.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslateReport {
    /// Max residual of `u` over all interior nodes.
    pub baseline: f64,
    /// Max residual of `u_z` over the overlap.
    pub translated: f64,
    /// Interior nodes whose whole stencil maps inside the grid.
    pub overlap: usize,
    pub tol: f64,
    pub pass: bool,
}

/// Builds `u_z(x) = u(z·x)` by bicubic interpolation and evaluates the discrete
/// residual of `u_z` where its stencil is defined. The default tolerance is ten
/// times the baseline residual plus an `h²` interpolation allowance.
pub fn left_translate_check(
    u: &DiscreteField,
    grid: &AnnulusGrid,
    law: FluxLaw,
    c: f64,
    z: &GElem,
    tol: Option<f64>,
) -> Result<TranslateReport, SolveError> {
    check_field(grid, u)?;
    if z.dim() != 2 {
        return Err(SolveError::Precondition("translations act on the plane".into()));
    }
    let op = Operator::new(grid, law, c);
    let interior = grid.first_interior()..grid.nr();
    let baseline = op.max_residual(u);
    let (uz, valid) = if *z == GElem::identity(2) {
        (u.clone(), vec![true; grid.len()])
    } else {
        let mut uz = DiscreteField::zeros(grid);
        let mut valid = vec![false; grid.len()];
        for i in 0..grid.rings() {
            for j in 0..grid.ntheta() {
                let y = z.act(&grid.point(i, j));
                let (r, t) = polar_chart_inv(&y)?;
                if let Some(v) = interpolate(u, grid, r, t) {
                    uz.set(i, j, v);
                    valid[grid.index(i, j)] = true;
                }
            }
        }
        (uz, valid)
    };
    let nt = grid.ntheta() as isize;
    let is_valid = |i: isize, j: isize| {
        let (i, j) = if i < 0 {
            (0usize, (j + nt / 2).rem_euclid(nt) as usize)
        } else {
            (i as usize, j.rem_euclid(nt) as usize)
        };
        valid[grid.index(i, j)]
    };
    let mut overlap = 0;
    let mut translated: f64 = 0.0;
    for i in interior {
        for j in 0..grid.ntheta() {
            let (ii, jj) = (i as isize, j as isize);
            let full = (-1..=1).all(|a| (-1..=1).all(|b| is_valid(ii + a, jj + b)));
            if full {
                overlap += 1;
                translated = translated.max(op.residual(&uz, i, j).abs());
            }
        }
    }
    if overlap == 0 {
        return Err(SolveError::Precondition("translated domain does not overlap the grid".into()));
    }
    let tol = tol.unwrap_or(10.0 * baseline + grid.h().powi(2));
    Ok(TranslateReport {
        baseline,
        translated,
        overlap,
        tol,
        pass: translated <= tol,
    })
}

/// Spot check of `|u(x₁) − u(x₂)| ≤ k·R(x₀)·R(x₂⁻¹)·d(x₁, x₂)` on node pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslationEstimateReport {
    /// Boundary Lipschitz quotient `sup |u(x) − u(z)|/d(x, z)`, `x` interior, `z` on the boundary.
    pub k: f64,
    /// `sup R(x₀)` over the grid nodes, standing in for the unknown `x₀`.
    pub r_sup: f64,
    pub pairs: usize,
    /// Largest `|u(x₁) − u(x₂)| / bound` seen.
    pub worst_ratio: f64,
    pub pass: bool,
}

pub fn translation_estimate_check(
    u: &DiscreteField,
    grid: &AnnulusGrid,
    pairs: usize,
    seed: u64,
) -> Result<TranslationEstimateReport, SolveError> {
    check_field(grid, u)?;
    let mut interior = Vec::new();
    let mut boundary = Vec::new();
    for i in 0..grid.rings() {
        for j in 0..grid.ntheta() {
            let entry = (grid.point(i, j), u.get(i, j));
            if grid.is_boundary(i) {
                boundary.push(entry);
            } else {
                interior.push(entry);
            }
        }
    }
    let mut k: f64 = 0.0;
    for (x, ux) in &interior {
        for (z, uz) in &boundary {
            k = k.max((ux - uz).abs() / distance(x, z));
        }
    }
    let e = GElem::identity(2);
    let r_sup = interior
        .iter()
        .chain(&boundary)
        .map(|(p, _)| GElem::from_point(p).right_diff_norm(&e))
        .fold(0.0, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_ratio: f64 = 0.0;
    for _ in 0..pairs {
        let (x1, u1) = &interior[rng.gen_range(0..interior.len())];
        let (x2, u2) = &interior[rng.gen_range(0..interior.len())];
        let d = distance(x1, x2);
        if d == 0.0 {
            continue;
        }
        let r2 = GElem::from_point(x2).inv().right_diff_norm(&e);
        let bound = k * r_sup * r2 * d;
        let lhs = (u1 - u2).abs();
        let ratio = if bound > 0.0 {
            lhs / bound
        } else if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        worst_ratio = worst_ratio.max(ratio);
    }
    Ok(TranslationEstimateReport {
        k,
        r_sup,
        pairs,
        worst_ratio,
        pass: worst_ratio <= 1.0 + 1e-9,
    })
}

/// Asymptotic class of the decay indicator `e^R·sup_{S_R}‖∇u‖`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayClass {
    ToZero,
    ToPositive,
    Other,
}

impl fmt::Display for DecayClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecayClass::ToZero => "→0",
            DecayClass::ToPositive => "→C>0",
            DecayClass::Other => "unbounded/other",
        })
    }
}

/// `→0` if the last three values are non-increasing and at most `1e−3·first`;
/// `→C>0` if the last three are positive and within 5% of each other.
pub fn classify_decay(values: &[f64]) -> DecayClass {
    if values.len() < 3 {
        return DecayClass::Other;
    }
    let first = values[0];
    let tail = &values[values.len() - 3..];
    let non_increasing = tail.windows(2).all(|w| w[1] <= w[0]);
    if non_increasing && tail.iter().all(|&v| v.abs() <= 1e-3 * first.abs()) {
        return DecayClass::ToZero;
    }
    let hi = tail.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = tail.iter().cloned().fold(f64::INFINITY, f64::min);
    if lo > 0.0 && (hi - lo) <= 0.05 * hi {
        return DecayClass::ToPositive;
    }
    DecayClass::Other
}

/// A named family member: `R ↦ sup_{S_R} ‖∇u‖`.
pub struct DecayMember<'a> {
    pub label: String,
    pub sup_gradient: Box<dyn Fn(f64) -> f64 + 'a>,
}

impl<'a> DecayMember<'a> {
    pub fn new(label: impl Into<String>, sup_gradient: impl Fn(f64) -> f64 + 'a) -> Self {
        Self {
            label: label.into(),
            sup_gradient: Box::new(sup_gradient),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub label: String,
    pub r: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayTable {
    pub rows: Vec<DecayRow>,
    /// `(label, class, last value)` in family order.
    pub classes: Vec<(String, DecayClass, f64)>,
}

pub fn decay_scan(family: &[DecayMember<'_>], radii: &[f64]) -> DecayTable {
    let mut rows = Vec::new();
    let mut classes = Vec::new();
    for member in family {
        let values: Vec<f64> = radii.iter().map(|&r| r.exp() * (member.sup_gradient)(r)).collect();
        for (&r, &value) in radii.iter().zip(&values) {
            rows.push(DecayRow {
                label: member.label.clone(),
                r,
                value,
            });
        }
        classes.push((
            member.label.clone(),
            classify_decay(&values),
            values.last().copied().unwrap_or(f64::NAN),
        ));
    }
    DecayTable { rows, classes }
}
