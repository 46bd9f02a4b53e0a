//! Conservative finite-volume discretisation on a polar grid of ℍ² and its
//! nonlinear solvers.
//!
//! Cell `(i, j)` spans `[r_i ± h_r/2] × [θ_j ± h_θ/2]`. Face fluxes are
//!
//! ```text
//! radial:   sinh(r_f)·h_θ·κ(g²)·(u_{i+1,j} − u_{i,j})/h_r
//! angular:  h_r·κ(g²)·(u_{i,j+1} − u_{i,j})/(h_θ·sinh r_i)
//! ```
//!
//! with `κ = a(g)/g` and `g²` built from the normal difference and the average of
//! the two adjacent central tangential differences. The cell balance is the net
//! outward flux plus `C·sinh(r_i)·h_r·h_θ`; the reported residual divides it by
//! the cell area `sinh(r_i)·h_r·h_θ`, approximating `div(κ∇u) + C` pointwise.

use super::grid::{check_field, AnnulusGrid, DiscreteField, GridKind};
use super::law::FluxLaw;
use crate::error::SolveError;
use faer::prelude::*;
use faer::sparse::{SparseColMat, Triplet};

/// Nonlinear iteration used by [`fd_solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    /// Newton with exact face-flux Jacobian, sparse LU, backtracking line search.
    Newton,
    /// Damped nonlinear Gauss–Seidel with red-black sweep order.
    GaussSeidel { damping: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverParams {
    /// Stop when the max scaled residual is at most this.
    pub tol: f64,
    /// Newton steps or Gauss–Seidel sweeps.
    pub max_iter: usize,
    pub method: Method,
}

impl Default for SolverParams {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 60,
            method: Method::Newton,
        }
    }
}

impl SolverParams {
    pub fn gauss_seidel(damping: f64, max_sweeps: usize) -> Self {
        Self {
            tol: 1e-10,
            max_iter: max_sweeps,
            method: Method::GaussSeidel { damping },
        }
    }
}

/// A converged discrete solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Solved {
    pub field: DiscreteField,
    pub iterations: usize,
    pub residual: f64,
}

/// Dependency of a face flux on one node, `(ring, angle, ∂F/∂u)`. Ring −1 is the
/// ghost across the pole of a disk grid.
type Dep = (isize, isize, f64);

struct Face {
    flux: f64,
    g2: f64,
    deps: [Dep; 6],
}

/// The discrete operator for one grid, law and source constant.
pub struct Operator<'a> {
    grid: &'a AnnulusGrid,
    law: FluxLaw,
    c: f64,
}

impl<'a> Operator<'a> {
    pub fn new(grid: &'a AnnulusGrid, law: FluxLaw, c: f64) -> Self {
        Self { grid, law, c }
    }

    pub fn grid(&self) -> &AnnulusGrid {
        self.grid
    }

    /// Canonical node for possibly wrapped or ghost indices.
    fn canonical(&self, i: isize, j: isize) -> (usize, usize) {
        let nt = self.grid.ntheta() as isize;
        if i < 0 {
            debug_assert_eq!(self.grid.kind(), GridKind::Disk);
            let j = (j + nt / 2).rem_euclid(nt);
            return (0, j as usize);
        }
        (i as usize, j.rem_euclid(nt) as usize)
    }

    fn val(&self, u: &DiscreteField, i: isize, j: isize) -> f64 {
        let (i, j) = self.canonical(i, j);
        u.get(i, j)
    }

    #[allow(clippy::too_many_arguments)]
    fn face(
        &self,
        u: &DiscreteField,
        a: (isize, isize),
        b: (isize, isize),
        h_main: f64,
        cross: [(isize, isize, f64); 4],
        w_d: f64,
        w_t: f64,
        factor: f64,
    ) -> Face {
        let d = (self.val(u, b.0, b.1) - self.val(u, a.0, a.1)) / h_main;
        let t: f64 = cross.iter().map(|&(i, j, c)| c * self.val(u, i, j)).sum();
        let g2 = w_d * d * d + w_t * t * t;
        let kappa = self.law.kappa(g2);
        let dkappa = self.law.kappa_prime(g2);
        let flux = factor * kappa * d;
        let main = factor * (kappa + 2.0 * dkappa * w_d * d * d) / h_main;
        let tang = factor * 2.0 * dkappa * w_t * t * d;
        let mut deps = [(0, 0, 0.0); 6];
        deps[0] = (b.0, b.1, main);
        deps[1] = (a.0, a.1, -main);
        for (k, &(i, j, c)) in cross.iter().enumerate() {
            deps[k + 2] = (i, j, tang * c);
        }
        Face { flux, g2, deps }
    }

    /// Flux through the face between rings `i` and `i + 1` at angle `j`.
    fn radial_face(&self, u: &DiscreteField, i: isize, j: isize) -> Face {
        let g = self.grid;
        let rf = g.r(i as usize) + 0.5 * g.hr();
        let sf = rf.sinh();
        let c = 0.25 / g.htheta();
        self.face(
            u,
            (i, j),
            (i + 1, j),
            g.hr(),
            [(i, j + 1, c), (i, j - 1, -c), (i + 1, j + 1, c), (i + 1, j - 1, -c)],
            1.0,
            1.0 / (sf * sf),
            sf * g.htheta(),
        )
    }

    /// Flux through the face between angles `j` and `j + 1` on ring `i`.
    fn angular_face(&self, u: &DiscreteField, i: isize, j: isize) -> Face {
        let g = self.grid;
        let si = g.r(i as usize).sinh();
        let c = 0.25 / g.hr();
        self.face(
            u,
            (i, j),
            (i, j + 1),
            g.htheta(),
            [(i + 1, j, c), (i - 1, j, -c), (i + 1, j + 1, c), (i - 1, j + 1, -c)],
            1.0 / (si * si),
            1.0,
            g.hr() / si,
        )
    }

    fn has_inner_face(&self, i: usize) -> bool {
        !(self.grid.kind() == GridKind::Disk && i == 0)
    }

    fn cell_area(&self, i: usize) -> f64 {
        self.grid.r(i).sinh() * self.grid.hr() * self.grid.htheta()
    }

    /// Net outward flux plus source for interior cell `(i, j)`.
    pub fn balance(&self, u: &DiscreteField, i: usize, j: usize) -> f64 {
        let (ii, jj) = (i as isize, j as isize);
        let mut b = self.radial_face(u, ii, jj).flux;
        if self.has_inner_face(i) {
            b -= self.radial_face(u, ii - 1, jj).flux;
        }
        b += self.angular_face(u, ii, jj).flux - self.angular_face(u, ii, jj - 1).flux;
        b + self.c * self.cell_area(i)
    }

    /// Balance divided by the cell area.
    pub fn residual(&self, u: &DiscreteField, i: usize, j: usize) -> f64 {
        self.balance(u, i, j) / self.cell_area(i)
    }

    /// Scaled residual at every interior node; zero on boundary rings.
    pub fn residual_field(&self, u: &DiscreteField) -> DiscreteField {
        let g = self.grid;
        let mut out = DiscreteField::zeros(g);
        for i in g.first_interior()..g.nr() {
            for j in 0..g.ntheta() {
                out.set(i, j, self.residual(u, i, j));
            }
        }
        out
    }

    pub fn max_residual(&self, u: &DiscreteField) -> f64 {
        self.residual_field(u).values().iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Balance and its derivatives with respect to neighbouring nodes.
    fn balance_with_deps(&self, u: &DiscreteField, i: usize, j: usize) -> (f64, Vec<Dep>) {
        let (ii, jj) = (i as isize, j as isize);
        let mut deps = Vec::with_capacity(24);
        let mut add = |f: Face, sign: f64, b: &mut f64| {
            *b += sign * f.flux;
            deps.extend(f.deps.iter().map(|&(a, c, d)| (a, c, sign * d)));
        };
        let mut b = self.c * self.cell_area(i);
        add(self.radial_face(u, ii, jj), 1.0, &mut b);
        if self.has_inner_face(i) {
            add(self.radial_face(u, ii - 1, jj), -1.0, &mut b);
        }
        add(self.angular_face(u, ii, jj), 1.0, &mut b);
        add(self.angular_face(u, ii, jj - 1), -1.0, &mut b);
        (b, deps)
    }

    fn unknown(&self, i: usize, j: usize) -> Option<usize> {
        let g = self.grid;
        if g.is_boundary(i) {
            None
        } else {
            Some((i - g.first_interior()) * g.ntheta() + j)
        }
    }

    fn unknown_count(&self) -> usize {
        (self.grid.nr() - self.grid.first_interior()) * self.grid.ntheta()
    }

    /// Largest face gradient and the radius where it occurs.
    pub fn max_face_gradient(&self, u: &DiscreteField) -> (f64, f64) {
        let g = self.grid;
        let mut best = (0.0f64, g.r(0));
        for i in 0..g.nr() {
            for j in 0..g.ntheta() {
                let f = self.radial_face(u, i as isize, j as isize);
                let gr = f.g2.sqrt();
                if !(gr <= best.0) {
                    best = (gr, g.r(i) + 0.5 * g.hr());
                }
            }
        }
        best
    }

    fn balance_norm(&self, u: &DiscreteField) -> f64 {
        let g = self.grid;
        let mut s = 0.0;
        for i in g.first_interior()..g.nr() {
            for j in 0..g.ntheta() {
                let b = self.residual(u, i, j);
                s += b * b;
            }
        }
        s.sqrt()
    }

    /// One Newton step direction `δ` solving `J δ = −b`.
    fn newton_direction(&self, u: &DiscreteField) -> Result<Vec<f64>, SolveError> {
        let g = self.grid;
        let n = self.unknown_count();
        let mut rhs = vec![0.0; n];
        let mut triplets = Vec::with_capacity(n * 10);
        for i in g.first_interior()..g.nr() {
            for j in 0..g.ntheta() {
                let row = self.unknown(i, j).expect("interior node");
                let (b, deps) = self.balance_with_deps(u, i, j);
                // Rows scaled by the cell area so the system matches the residual.
                let scale = 1.0 / self.cell_area(i);
                rhs[row] = -b * scale;
                let mut entries: Vec<(usize, f64)> = deps
                    .into_iter()
                    .filter_map(|(a, c, d)| {
                        let (ci, cj) = self.canonical(a, c);
                        self.unknown(ci, cj).map(|col| (col, d * scale))
                    })
                    .collect();
                entries.sort_by_key(|e| e.0);
                let mut k = 0;
                while k < entries.len() {
                    let col = entries[k].0;
                    let mut v = 0.0;
                    while k < entries.len() && entries[k].0 == col {
                        v += entries[k].1;
                        k += 1;
                    }
                    triplets.push(Triplet::new(row, col, v));
                }
            }
        }
        faer::set_global_parallelism(Par::Seq);
        let jac = SparseColMat::<usize, f64>::try_new_from_triplets(n, n, &triplets)
            .map_err(|e| SolveError::Precondition(format!("jacobian assembly failed: {e:?}")))?;
        let lu = jac
            .sp_lu()
            .map_err(|e| SolveError::Precondition(format!("jacobian factorisation failed: {e:?}")))?;
        let b = Col::<f64>::from_fn(n, |k| rhs[k]);
        let x = lu.solve(&b);
        Ok((0..n).map(|k| x[k]).collect())
    }

    fn apply_step(&self, u: &DiscreteField, delta: &[f64], lambda: f64) -> DiscreteField {
        let g = self.grid;
        let mut out = u.clone();
        for i in g.first_interior()..g.nr() {
            for j in 0..g.ntheta() {
                let k = self.unknown(i, j).expect("interior node");
                out.set(i, j, u.get(i, j) + lambda * delta[k]);
            }
        }
        out
    }

    fn newton(&self, mut u: DiscreteField, params: &SolverParams) -> Result<Solved, SolveError> {
        let mut norm = self.balance_norm(&u);
        for it in 0..=params.max_iter {
            let res = self.max_residual(&u);
            if !res.is_finite() {
                return Err(self.failure(&u, it, res));
            }
            if res <= params.tol {
                return Ok(Solved {
                    field: u,
                    iterations: it,
                    residual: res,
                });
            }
            if it == params.max_iter {
                return Err(self.failure(&u, it, res));
            }
            let delta = self.newton_direction(&u)?;
            let mut lambda = 1.0;
            loop {
                let trial = self.apply_step(&u, &delta, lambda);
                let trial_norm = self.balance_norm(&trial);
                if trial_norm.is_finite() && trial_norm < (1.0 - 1e-4 * lambda) * norm {
                    u = trial;
                    norm = trial_norm;
                    break;
                }
                lambda *= 0.5;
                if lambda < 1e-6 {
                    return Err(self.failure(&u, it, res));
                }
            }
        }
        unreachable!("loop returns on the final iteration")
    }

    fn gauss_seidel(&self, mut u: DiscreteField, params: &SolverParams, damping: f64) -> Result<Solved, SolveError> {
        let g = self.grid;
        for sweep in 0..=params.max_iter {
            let res = self.max_residual(&u);
            if !res.is_finite() {
                return Err(self.failure(&u, sweep, res));
            }
            if res <= params.tol {
                return Ok(Solved {
                    field: u,
                    iterations: sweep,
                    residual: res,
                });
            }
            if sweep == params.max_iter {
                return Err(self.failure(&u, sweep, res));
            }
            for color in 0..2 {
                for i in g.first_interior()..g.nr() {
                    for j in 0..g.ntheta() {
                        if (i + j) % 2 != color {
                            continue;
                        }
                        let (b, deps) = self.balance_with_deps(&u, i, j);
                        let diag: f64 = deps
                            .iter()
                            .filter(|&&(a, c, _)| self.canonical(a, c) == (i, j))
                            .map(|d| d.2)
                            .sum();
                        if diag != 0.0 {
                            let v = u.get(i, j) - damping * b / diag;
                            u.set(i, j, v);
                        }
                    }
                }
            }
        }
        unreachable!("loop returns on the final sweep")
    }

    /// Radius of a saturated face, if any: `1 − a(g) < 1e−4` for a bounded law.
    fn saturation(&self, u: &DiscreteField) -> Option<f64> {
        let cap = self.law.sup_a();
        if !cap.is_finite() {
            return None;
        }
        let (gmax, radius) = self.max_face_gradient(u);
        (!gmax.is_finite() || cap - self.law.a(gmax) < 1e-4 * cap).then_some(radius)
    }

    fn failure(&self, u: &DiscreteField, iterations: usize, residual: f64) -> SolveError {
        match self.saturation(u) {
            Some(radius) => SolveError::NoSolution { radius },
            None => SolveError::NotConverged { iterations, residual },
        }
    }
}

/// Solves the discrete problem with Dirichlet data taken from the boundary rings of `boundary`.
///
/// Interior values of `boundary` are ignored; the iteration starts from the
/// solution of the linear law with the same data and source.
pub fn fd_solve(
    grid: &AnnulusGrid,
    law: FluxLaw,
    c: f64,
    boundary: &DiscreteField,
    params: &SolverParams,
) -> Result<Solved, SolveError> {
    check_field(grid, boundary)?;
    if !(params.tol > 0.0) {
        return Err(SolveError::Precondition("solver tolerance must be positive".into()));
    }
    let mut u0 = boundary.clone();
    for i in grid.first_interior()..grid.nr() {
        for j in 0..grid.ntheta() {
            u0.set(i, j, 0.0);
        }
    }
    let linear = Operator::new(grid, FluxLaw::Linear, c);
    let start = match (law, params.method) {
        (FluxLaw::Linear, Method::GaussSeidel { .. }) => u0,
        _ => {
            let linear_params = SolverParams {
                method: Method::Newton,
                max_iter: 5,
                ..*params
            };
            linear.newton(u0, &linear_params)?.field
        }
    };
    let op = Operator::new(grid, law, c);
    let solved = match params.method {
        Method::Newton => op.newton(start, params)?,
        Method::GaussSeidel { damping } => op.gauss_seidel(start, params, damping)?,
    };
    // A bounded flux law can balance every cell while a boundary face carries an
    // unbounded slope; such a state is the discrete trace of non-existence.
    if let Some(radius) = op.saturation(&solved.field) {
        return Err(SolveError::NoSolution { radius });
    }
    Ok(solved)
}
