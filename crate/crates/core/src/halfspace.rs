//! Upper half-space model of hyperbolic n-space.
//!
//! Points are `(x, s)` with `x ∈ ℝⁿ⁻¹` and height `s > 0`; the metric is the
//! Euclidean one divided by `s²`, which has constant curvature −1. Curvature is
//! fixed; nothing here is parametrised by it.
//!
//! Besides exact distances and closed-form geodesics the module carries the
//! two charts used elsewhere: the Euclidean parametrisation of geodesic spheres
//! about `e = (0, …, 0, 1)` and, for n = 2, intrinsic geodesic polar
//! coordinates `(r, θ)` built by pushing the Poincaré disk through a Cayley map.

use num_complex::Complex64;

use crate::error::GeometryError;

/// Geodesics whose horizontal direction falls below this (relative to the
/// unit speed) are treated as vertical rays.
const VERTICAL_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    x: Vec<f64>,
    s: f64,
}

impl HPoint {
    pub fn new(x: Vec<f64>, s: f64) -> Result<Self, GeometryError> {
        if !(s.is_finite() && s > 0.0) {
            return Err(GeometryError::InvalidHeight(s));
        }
        if x.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { x, s })
    }

    /// Point of ℍ² at `(x, s)`.
    ///
    /// # Panics
    /// If `s` is not positive and finite.
    pub fn planar(x: f64, s: f64) -> Self {
        Self::new(vec![x], s).expect("planar point must have positive height")
    }

    /// Builds a point from its full coordinate vector `(x₁, …, xₙ)`.
    pub fn from_coords(coords: &[f64]) -> Result<Self, GeometryError> {
        match coords.split_last() {
            Some((&s, x)) if !x.is_empty() => Self::new(x.to_vec(), s),
            _ => Err(GeometryError::DimensionTooSmall(coords.len())),
        }
    }

    /// The point `e = (0, …, 0, 1)`, neutral element of the group structure.
    pub fn origin(n: usize) -> Self {
        assert!(n >= 2, "hyperbolic space needs n >= 2");
        Self {
            x: vec![0.0; n - 1],
            s: 1.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.x.len() + 1
    }

    pub fn horizontal(&self) -> &[f64] {
        &self.x
    }

    pub fn height(&self) -> f64 {
        self.s
    }

    pub fn coords(&self) -> Vec<f64> {
        let mut c = self.x.clone();
        c.push(self.s);
        c
    }

    /// Euclidean distance between coordinate vectors.
    pub fn euclidean_distance(&self, other: &HPoint) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let horizontal: f64 = self
            .x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        (horizontal + (self.s - other.s).powi(2)).sqrt()
    }
}

/// A tangent vector in coordinate components, attached to its base point.
#[derive(Debug, Clone, PartialEq)]
pub struct HTangent {
    base: HPoint,
    v: Vec<f64>,
}

impl HTangent {
    pub fn new(base: HPoint, v: Vec<f64>) -> Result<Self, GeometryError> {
        if v.len() != base.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: base.dim(),
                got: v.len(),
            });
        }
        if v.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { base, v })
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    pub fn components(&self) -> &[f64] {
        &self.v
    }

    pub fn norm(&self) -> f64 {
        inner_at(&self.base, &self.v, &self.v).sqrt()
    }
}

/// Metric inner product `⟨u, w⟩ = (u·w)/s²` of raw components at `p`.
pub fn inner_at(p: &HPoint, u: &[f64], w: &[f64]) -> f64 {
    debug_assert_eq!(u.len(), p.dim());
    debug_assert_eq!(w.len(), p.dim());
    let dot: f64 = u.iter().zip(w).map(|(a, b)| a * b).sum();
    dot / (p.s * p.s)
}

/// Hyperbolic inner product of two tangent vectors at `p`.
pub fn metric_inner(p: &HPoint, u: &HTangent, w: &HTangent) -> Result<f64, GeometryError> {
    if u.base != *p || w.base != *p {
        return Err(GeometryError::BaseMismatch);
    }
    Ok(inner_at(p, &u.v, &w.v))
}

/// Hyperbolic distance, `2·asinh(|p − q| / (2√(s_p s_q)))`.
///
/// Equivalent to `arccosh(1 + |p − q|²/(2 s_p s_q))` but free of the
/// cancellation the arccosh form suffers for nearby points.
pub fn distance(p: &HPoint, q: &HPoint) -> f64 {
    let chord = p.euclidean_distance(q);
    2.0 * (chord / (2.0 * (p.s * q.s).sqrt())).asinh()
}

/// Contraction `Γᵏᵢⱼ aⁱ bʲ` of the Levi-Civita connection at `p`.
///
/// For `g = δ/s²` the symbols are `Γᵏᵢⱼ = −(δᵢₖδⱼₙ + δⱼₖδᵢₙ − δᵢⱼδₖₙ)/s`.
pub fn christoffel(p: &HPoint, a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = p.dim();
    let last = n - 1;
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    (0..n)
        .map(|k| {
            let mut v = a[k] * b[last] + b[k] * a[last];
            if k == last {
                v -= dot;
            }
            -v / p.s
        })
        .collect()
}

/// Unit-speed geodesic in closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum Geodesic {
    /// `τ ↦ (foot, s₀·e^{sign·τ})`.
    Vertical { foot: Vec<f64>, s0: f64, sign: f64 },
    /// `τ ↦ (c + ρ·tanh(τ+τ₀)·dir, ρ·sech(τ+τ₀))` in the vertical plane through `dir`.
    Arc {
        center: Vec<f64>,
        radius: f64,
        dir: Vec<f64>,
        phase: f64,
    },
}

impl Geodesic {
    pub fn eval(&self, tau: f64) -> HPoint {
        match self {
            Geodesic::Vertical { foot, s0, sign } => HPoint {
                x: foot.clone(),
                s: s0 * (sign * tau).exp(),
            },
            Geodesic::Arc {
                center,
                radius,
                dir,
                phase,
            } => {
                let sigma = tau + phase;
                let th = sigma.tanh();
                HPoint {
                    x: center
                        .iter()
                        .zip(dir)
                        .map(|(c, d)| c + radius * th * d)
                        .collect(),
                    s: radius / sigma.cosh(),
                }
            }
        }
    }

    /// Coordinate velocity `dγ/dτ`.
    pub fn velocity(&self, tau: f64) -> Vec<f64> {
        match self {
            Geodesic::Vertical { foot, s0, sign } => {
                let mut v = vec![0.0; foot.len()];
                v.push(sign * s0 * (sign * tau).exp());
                v
            }
            Geodesic::Arc {
                radius, dir, phase, ..
            } => {
                let sigma = tau + phase;
                let sech = 1.0 / sigma.cosh();
                let mut v: Vec<f64> = dir.iter().map(|d| radius * sech * sech * d).collect();
                v.push(-radius * sech * sigma.tanh());
                v
            }
        }
    }
}

/// Geodesic with `γ(0) = p` and `γ'(0) ∝ u`; the direction is normalised.
pub fn geodesic_through(p: &HPoint, u: &HTangent) -> Result<Geodesic, GeometryError> {
    if u.base != *p {
        return Err(GeometryError::BaseMismatch);
    }
    let speed = u.norm();
    if speed == 0.0 {
        return Err(GeometryError::ZeroDirection);
    }
    // Components of the unit direction in the orthonormal frame s·∂ᵢ.
    let frame: Vec<f64> = u.v.iter().map(|c| c / (speed * p.s)).collect();
    let (vertical, horiz) = frame.split_last().expect("n >= 2");
    let w = horiz.iter().map(|c| c * c).sum::<f64>().sqrt();
    if w <= VERTICAL_THRESHOLD {
        return Ok(Geodesic::Vertical {
            foot: p.x.clone(),
            s0: p.s,
            sign: vertical.signum(),
        });
    }
    let dir: Vec<f64> = horiz.iter().map(|c| c / w).collect();
    let radius = p.s / w;
    // tanh(τ₀) = −v, sech(τ₀) = w
    let phase = -vertical.atanh();
    let center = p
        .x
        .iter()
        .zip(&dir)
        .map(|(x, d)| x + radius * vertical * d)
        .collect();
    Ok(Geodesic::Arc {
        center,
        radius,
        dir,
        phase,
    })
}

/// Evaluates `γ(τ)`.
pub fn geodesic_eval(gamma: &Geodesic, tau: f64) -> HPoint {
    gamma.eval(tau)
}

/// Euclidean centre height and radius of the geodesic sphere `S_r` about `e`:
/// `(cosh r, sinh r)`.
pub fn sphere_euclidean(r: f64) -> Result<(f64, f64), GeometryError> {
    if r < 0.0 || r.is_nan() {
        return Err(GeometryError::NegativeRadius(r));
    }
    Ok((r.cosh(), r.sinh()))
}

/// Whether `p` lies on `S_r` about `e`, within Euclidean tolerance `tol`.
pub fn sphere_membership(r: f64, p: &HPoint, tol: f64) -> Result<bool, GeometryError> {
    let (center, radius) = sphere_euclidean(r)?;
    let horizontal: f64 = p.x.iter().map(|c| c * c).sum();
    let dist = (horizontal + (p.s - center).powi(2)).sqrt();
    Ok((dist - radius).abs() <= tol)
}

/// Point of `S_r` about `e` in the Euclidean parametrisation
/// `(0, …, 0, cosh r) + sinh r · direction`, with `direction` a unit vector of ℝⁿ.
pub fn sphere_param_euclidean(r: f64, direction: &[f64]) -> Result<HPoint, GeometryError> {
    let (center, radius) = sphere_euclidean(r)?;
    let norm = direction.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(GeometryError::ZeroDirection);
    }
    if direction.len() < 2 {
        return Err(GeometryError::DimensionTooSmall(direction.len()));
    }
    let (last, horiz) = direction.split_last().expect("len >= 2");
    HPoint::new(
        horiz.iter().map(|c| radius * c / norm).collect(),
        center + radius * last / norm,
    )
}

/// Planar form of [`sphere_param_euclidean`]: `(sinh r cos θ, cosh r + sinh r sin θ)`.
///
/// `θ` here is the Euclidean angle about the circle's centre, not the
/// intrinsic polar angle of [`polar_chart`].
pub fn sphere_param_planar(r: f64, theta: f64) -> Result<HPoint, GeometryError> {
    sphere_param_euclidean(r, &[theta.cos(), theta.sin()])
}

/// Intrinsic geodesic polar coordinates about `e` on ℍ².
///
/// The disk point `tanh(r/2)·e^{iθ}` is sent to the half-plane by
/// `z = i(1 − iw)/(1 + iw)`, which maps 0 to `i`, has identity differential
/// there, and so points `θ = 0` along `+x` and `θ = π/2` straight up.
pub fn polar_chart(r: f64, theta: f64) -> Result<HPoint, GeometryError> {
    if r < 0.0 || r.is_nan() {
        return Err(GeometryError::NegativeRadius(r));
    }
    let w = Complex64::from_polar((0.5 * r).tanh(), theta);
    let i = Complex64::i();
    let z = i * (1.0 - i * w) / (1.0 + i * w);
    HPoint::new(vec![z.re], z.im)
}

/// Inverse of [`polar_chart`]. Returns `(r, θ)` with `θ ∈ [0, 2π)`; at the pole
/// `θ` is undefined and reported as 0.
pub fn polar_chart_inv(p: &HPoint) -> Result<(f64, f64), GeometryError> {
    if p.dim() != 2 {
        return Err(GeometryError::DimensionMismatch {
            expected: 2,
            got: p.dim(),
        });
    }
    let r = distance(&HPoint::origin(2), p);
    if r == 0.0 {
        return Ok((0.0, 0.0));
    }
    let i = Complex64::i();
    let z = Complex64::new(p.x[0], p.s);
    let w = i * (z - i) / (z + i);
    let mut theta = w.im.atan2(w.re);
    if theta < 0.0 {
        theta += std::f64::consts::TAU;
    }
    if theta >= std::f64::consts::TAU {
        theta = 0.0;
    }
    Ok((r, theta))
}
