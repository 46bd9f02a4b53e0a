use crate::error::{GeometryError, SolveError};
use crate::halfspace::{polar_chart, HPoint};
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// `r₀ ≤ r ≤ R`, Dirichlet rings at both ends.
    Annulus,
    /// `r ≤ R`; radial nodes at `(i + ½)·h_r`, the pole cell closed by a
    /// zero-length face, a Dirichlet ring only at `R`.
    Disk,
}

/// Uniform polar grid about `e` on ℍ², periodic in `θ`.
///
/// Rings are indexed `i = 0..=nr`, angles `j = 0..ntheta`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnulusGrid {
    kind: GridKind,
    r_inner: f64,
    r_outer: f64,
    nr: usize,
    ntheta: usize,
    hr: f64,
    htheta: f64,
}

impl AnnulusGrid {
    pub fn annulus(r_inner: f64, r_outer: f64, nr: usize, ntheta: usize) -> Result<Self, SolveError> {
        if !(r_inner > 0.0 && r_outer > r_inner && r_outer.is_finite()) {
            return Err(SolveError::Precondition(format!(
                "annulus needs 0 < r_inner < r_outer, got [{r_inner}, {r_outer}]"
            )));
        }
        Self::check_sizes(nr, ntheta)?;
        Ok(Self {
            kind: GridKind::Annulus,
            r_inner,
            r_outer,
            nr,
            ntheta,
            hr: (r_outer - r_inner) / nr as f64,
            htheta: TAU / ntheta as f64,
        })
    }

    pub fn disk(r_outer: f64, nr: usize, ntheta: usize) -> Result<Self, SolveError> {
        if !(r_outer > 0.0 && r_outer.is_finite()) {
            return Err(SolveError::Precondition(format!("disk needs R > 0, got {r_outer}")));
        }
        Self::check_sizes(nr, ntheta)?;
        if ntheta % 2 != 0 {
            return Err(SolveError::Precondition("disk grids need an even angular count".into()));
        }
        let hr = r_outer / (nr as f64 + 0.5);
        Ok(Self {
            kind: GridKind::Disk,
            r_inner: 0.0,
            r_outer,
            nr,
            ntheta,
            hr,
            htheta: TAU / ntheta as f64,
        })
    }

    fn check_sizes(nr: usize, ntheta: usize) -> Result<(), SolveError> {
        if nr < 8 || ntheta < 8 {
            return Err(SolveError::Precondition(format!(
                "grid needs at least 8 radial and angular cells, got {nr}×{ntheta}"
            )));
        }
        Ok(())
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn nr(&self) -> usize {
        self.nr
    }

    pub fn ntheta(&self) -> usize {
        self.ntheta
    }

    /// Number of rings including boundary rings.
    pub fn rings(&self) -> usize {
        self.nr + 1
    }

    pub fn hr(&self) -> f64 {
        self.hr
    }

    pub fn htheta(&self) -> f64 {
        self.htheta
    }

    /// Largest of `h_r` and `h_θ`.
    pub fn h(&self) -> f64 {
        self.hr.max(self.htheta)
    }

    /// Inner radius of the domain (0 for disks).
    pub fn r_inner(&self) -> f64 {
        self.r_inner
    }

    pub fn r_outer(&self) -> f64 {
        self.r_outer
    }

    pub fn r(&self, i: usize) -> f64 {
        match self.kind {
            GridKind::Annulus => self.r_inner + i as f64 * self.hr,
            GridKind::Disk => (i as f64 + 0.5) * self.hr,
        }
    }

    pub fn theta(&self, j: usize) -> f64 {
        j as f64 * self.htheta
    }

    pub fn is_boundary(&self, i: usize) -> bool {
        i == self.nr || (self.kind == GridKind::Annulus && i == 0)
    }

    /// First ring that carries unknowns.
    pub fn first_interior(&self) -> usize {
        match self.kind {
            GridKind::Annulus => 1,
            GridKind::Disk => 0,
        }
    }

    pub fn boundary_rings(&self) -> Vec<usize> {
        match self.kind {
            GridKind::Annulus => vec![0, self.nr],
            GridKind::Disk => vec![self.nr],
        }
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.ntheta + j
    }

    pub fn len(&self) -> usize {
        self.rings() * self.ntheta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Half-plane point of node `(i, j)`.
    pub fn point(&self, i: usize, j: usize) -> HPoint {
        polar_chart(self.r(i), self.theta(j)).expect("grid radii are non-negative")
    }

    /// Fractional ring index of radius `r` (may lie outside `[0, nr]`).
    pub fn ring_coordinate(&self, r: f64) -> f64 {
        match self.kind {
            GridKind::Annulus => (r - self.r_inner) / self.hr,
            GridKind::Disk => r / self.hr - 0.5,
        }
    }
}

/// Values on every node of an [`AnnulusGrid`], ring-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteField {
    rings: usize,
    ntheta: usize,
    values: Vec<f64>,
}

impl DiscreteField {
    pub fn zeros(grid: &AnnulusGrid) -> Self {
        Self {
            rings: grid.rings(),
            ntheta: grid.ntheta(),
            values: vec![0.0; grid.len()],
        }
    }

    pub fn from_fn<F: FnMut(f64, f64) -> f64>(grid: &AnnulusGrid, mut f: F) -> Self {
        let mut out = Self::zeros(grid);
        for i in 0..grid.rings() {
            for j in 0..grid.ntheta() {
                out.values[grid.index(i, j)] = f(grid.r(i), grid.theta(j));
            }
        }
        out
    }

    /// Field sampled from a function on the half-plane.
    pub fn from_points<F: FnMut(&HPoint) -> f64>(grid: &AnnulusGrid, mut f: F) -> Self {
        let mut out = Self::zeros(grid);
        for i in 0..grid.rings() {
            for j in 0..grid.ntheta() {
                out.values[grid.index(i, j)] = f(&grid.point(i, j));
            }
        }
        out
    }

    pub fn matches(&self, grid: &AnnulusGrid) -> bool {
        self.rings == grid.rings() && self.ntheta == grid.ntheta()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.ntheta + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.values[i * self.ntheta + j] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn ring(&self, i: usize) -> &[f64] {
        &self.values[i * self.ntheta..(i + 1) * self.ntheta]
    }

    pub fn max_abs_diff(&self, other: &DiscreteField) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

pub(crate) fn check_field(grid: &AnnulusGrid, u: &DiscreteField) -> Result<(), SolveError> {
    if !u.matches(grid) {
        return Err(SolveError::Precondition("field does not match grid".into()));
    }
    if !u.is_finite() {
        return Err(SolveError::Geometry(GeometryError::NonFinite));
    }
    Ok(())
}
