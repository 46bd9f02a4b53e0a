//! The solvable group `AN` acting simply transitively on ℍⁿ.
//!
//! A point `p = (t, s)` is identified with the isometry `g_p = n_t ∘ a_s`,
//! `z ↦ s·z + (t, 0)`. Composition gives the group law
//!
//! ```text
//! (t, s) · (t', s') = (t + s·t', s·s'),    (t, s)⁻¹ = (−t/s, 1/s),
//! ```
//!
//! with identity `e = (0, 1)`. Left translations are hyperbolic isometries, so
//! the hyperbolic metric is the left-invariant metric induced by the Euclidean
//! inner product on `T_eℍⁿ`.
//!
//! Conjugation is `C_g(h) = g h g⁻¹`, and `Ad_g = d(C_g)_e` is the block matrix
//! `[[s·I, −t], [0, 1]]`. The differential of right translation `R_g(h) = h g`
//! has operator norm `R(g)`, independent of `h`; for this group it equals
//! `‖Ad_{g⁻¹}‖ = ‖Ad_g‖ / s`.

use crate::error::GeometryError;
use crate::halfspace::{sphere_param_planar, HPoint};

/// Group element `(t, s)`, `t ∈ ℝⁿ⁻¹`, `s > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GElem {
    t: Vec<f64>,
    s: f64,
}

impl GElem {
    pub fn new(t: Vec<f64>, s: f64) -> Result<Self, GeometryError> {
        let p = HPoint::new(t, s)?;
        Ok(Self::from_point(&p))
    }

    /// # Panics
    /// If `s` is not positive and finite.
    pub fn planar(t: f64, s: f64) -> Self {
        Self::new(vec![t], s).expect("group element must have positive s")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_point(&HPoint::origin(n))
    }

    pub fn from_point(p: &HPoint) -> Self {
        Self {
            t: p.horizontal().to_vec(),
            s: p.height(),
        }
    }

    pub fn to_point(&self) -> HPoint {
        HPoint::new(self.t.clone(), self.s).expect("group elements are valid points")
    }

    pub fn dim(&self) -> usize {
        self.t.len() + 1
    }

    pub fn translation(&self) -> &[f64] {
        &self.t
    }

    pub fn scale(&self) -> f64 {
        self.s
    }

    pub fn mul(&self, h: &GElem) -> GElem {
        assert_eq!(self.dim(), h.dim(), "dimension mismatch");
        GElem {
            t: self
                .t
                .iter()
                .zip(&h.t)
                .map(|(a, b)| a + self.s * b)
                .collect(),
            s: self.s * h.s,
        }
    }

    pub fn inv(&self) -> GElem {
        GElem {
            t: self.t.iter().map(|a| -a / self.s).collect(),
            s: 1.0 / self.s,
        }
    }

    /// Left translation `L_g(p) = g·p`, an isometry of ℍⁿ.
    pub fn act(&self, p: &HPoint) -> HPoint {
        self.mul(&GElem::from_point(p)).to_point()
    }

    /// `g h g⁻¹ = (t + s·u − w·t, w)` for `h = (u, w)`.
    pub fn conj(&self, h: &GElem) -> GElem {
        assert_eq!(self.dim(), h.dim(), "dimension mismatch");
        GElem {
            t: self
                .t
                .iter()
                .zip(&h.t)
                .map(|(t, u)| t + self.s * u - h.s * t)
                .collect(),
            s: h.s,
        }
    }

    pub fn adjoint(&self) -> AdMatrix {
        let n = self.dim();
        let mut m = AdMatrix::identity(n);
        for i in 0..n - 1 {
            m.set(i, i, self.s);
            m.set(i, n - 1, -self.t[i]);
        }
        m
    }

    /// Largest singular value of `Ad_g`.
    ///
    /// Rotating `t` onto a single axis leaves `s` on the orthogonal directions
    /// and the 2×2 block `[[s, −|t|], [0, 1]]`, whose larger singular value
    /// dominates `s`.
    pub fn ad_norm(&self) -> f64 {
        let tau2: f64 = self.t.iter().map(|c| c * c).sum();
        upper_2x2_sigma_max(self.s, tau2)
    }

    /// Operator norm of `d(R_g)_h` between `(T_hℍⁿ, ⟨,⟩_h)` and `(T_{hg}ℍⁿ, ⟨,⟩_{hg})`.
    ///
    /// `R_g(h) = (t_h + s_h·t_g, s_h·s_g)` is affine in coordinates with
    /// differential `D = [[I, t_g], [0, s_g]]`. In orthonormal frames
    /// (`s_h·∂ᵢ` at `h`, `s_{hg}·∂ᵢ` at `hg`) it becomes `(s_h/s_{hg})·D`, which
    /// reduces to the same 2×2 block as [`GElem::ad_norm`].
    pub fn right_diff_norm(&self, h: &GElem) -> f64 {
        assert_eq!(self.dim(), h.dim(), "dimension mismatch");
        let hg = h.mul(self);
        let tau2: f64 = self.t.iter().map(|c| c * c).sum();
        (h.s / hg.s) * upper_2x2_sigma_max(self.s, tau2)
    }

    /// Frame matrix of `d(R_g)_h`, row-major; the norm of this matrix is
    /// [`GElem::right_diff_norm`].
    pub fn right_diff_frame(&self, h: &GElem) -> AdMatrix {
        let n = self.dim();
        let c = h.s / h.mul(self).s;
        let mut m = AdMatrix::identity(n);
        for i in 0..n - 1 {
            m.set(i, i, c);
            m.set(i, n - 1, c * self.t[i]);
        }
        m.set(n - 1, n - 1, c * self.s);
        m
    }
}

/// `σ_max` of `[[s, −τ], [0, 1]]` (equivalently `[[1, τ], [0, s]]`) given `τ²`.
fn upper_2x2_sigma_max(s: f64, tau2: f64) -> f64 {
    let trace = s * s + tau2 + 1.0;
    // (trace² − 4s²) factored to avoid cancellation near s = 1, τ = 0.
    let disc = (((s - 1.0).powi(2) + tau2) * ((s + 1.0).powi(2) + tau2)).sqrt();
    (0.5 * (trace + disc)).sqrt()
}

/// `Ad_g` as an `n×n` matrix in the coordinate basis of `T_eℍⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdMatrix {
    n: usize,
    data: Vec<f64>,
}

impl AdMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self { n, data }
    }

    pub fn from_rows(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    pub fn matmul(&self, other: &AdMatrix) -> AdMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum();
            }
        }
        AdMatrix { n, data }
    }

    /// Upper block-triangular, so the determinant is the product of the diagonal.
    pub fn det(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).product()
    }

    pub fn max_abs_diff(&self, other: &AdMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn mul(g: &GElem, h: &GElem) -> GElem {
    g.mul(h)
}

pub fn inv(g: &GElem) -> GElem {
    g.inv()
}

pub fn identity(n: usize) -> GElem {
    GElem::identity(n)
}

pub fn act(g: &GElem, p: &HPoint) -> HPoint {
    g.act(p)
}

pub fn conj(g: &GElem, h: &GElem) -> GElem {
    g.conj(h)
}

pub fn adjoint(g: &GElem) -> AdMatrix {
    g.adjoint()
}

pub fn ad_norm(g: &GElem) -> f64 {
    g.ad_norm()
}

pub fn right_diff_norm(g: &GElem, h: &GElem) -> f64 {
    g.right_diff_norm(h)
}

/// `max_{g ∈ B_R} ‖Ad_g‖ = cosh R + sinh R`.
pub fn ad_norm_ball_max(radius: f64) -> Result<f64, GeometryError> {
    if radius < 0.0 || radius.is_nan() {
        return Err(GeometryError::NegativeRadius(radius));
    }
    Ok(radius.cosh() + radius.sinh())
}

/// Grid resolution for [`ad_norm_ball_max_numeric`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallSamples {
    /// Number of concentric spheres `r_k = R·k/shells`, `k = 1..=shells`.
    pub shells: usize,
    /// Euclidean-angle samples per sphere.
    pub per_shell: usize,
}

impl Default for BallSamples {
    fn default() -> Self {
        Self {
            shells: 100,
            per_shell: 10_000,
        }
    }
}

/// Result of a sampled maximisation of `‖Ad‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallMax {
    pub value: f64,
    pub argmax: HPoint,
    /// Largest value strictly inside the ball (all shells but the outermost).
    pub interior_max: f64,
}

impl BallMax {
    /// `max_{∂B} ‖Ad‖ − max_{interior} ‖Ad‖`; positive under the strong maximum principle.
    pub fn boundary_margin(&self) -> f64 {
        self.value - self.interior_max
    }
}

/// Grid search of `‖Ad_g‖` over the closed geodesic disk `B_R ⊂ ℍ²` about `e`.
///
/// The n-dimensional maximum reduces to a totally geodesic plane through `e`,
/// so the planar search is sufficient. Ties keep the first (lowest shell,
/// lowest angle) sample.
pub fn ad_norm_ball_max_numeric(radius: f64, samples: BallSamples) -> Result<BallMax, GeometryError> {
    if radius < 0.0 || radius.is_nan() {
        return Err(GeometryError::NegativeRadius(radius));
    }
    let e = HPoint::origin(2);
    let mut best = BallMax {
        value: 1.0,
        argmax: e,
        interior_max: 1.0,
    };
    if radius == 0.0 || samples.shells == 0 {
        return Ok(best);
    }
    let mut boundary_best = f64::NEG_INFINITY;
    for k in 1..=samples.shells {
        let r = radius * k as f64 / samples.shells as f64;
        let on_boundary = k == samples.shells;
        for j in 0..samples.per_shell {
            let theta = std::f64::consts::TAU * j as f64 / samples.per_shell as f64;
            let p = sphere_param_planar(r, theta)?;
            let v = GElem::from_point(&p).ad_norm();
            if on_boundary {
                if v > boundary_best {
                    boundary_best = v;
                }
            } else if v > best.interior_max {
                best.interior_max = v;
            }
            if v > best.value {
                best.value = v;
                best.argmax = p;
            }
        }
    }
    Ok(best)
}
