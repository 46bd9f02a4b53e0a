//! Functions of geodesic polar coordinates `(r, θ)` about `e`.
//!
//! For a function of `r` and the first polar angle `θ` only, the Laplace–Beltrami
//! operator of ℍⁿ reduces to
//!
//! ```text
//! Δf = f_rr + (n−1)·coth r·f_r + (n−2)·cot θ·f_θ / sinh²r + f_θθ / sinh²r,
//! ‖∇f‖² = f_r² + f_θ² / sinh²r.
//! ```
//!
//! The bounded harmonic field is `v = K·q(r)·cos θ` with `K = C(n−1)/2` and
//! `q = I(r)/sinh^{n−1} r`, `I(r) = ∫₀^r sinh^{n−1}`. For `n = 2`, `q = tanh(r/2)`.

use crate::error::{GeometryError, QuadError};
use crate::halfspace::{polar_chart, HPoint, HTangent};
use crate::quadrature::{integrate, QuadOptions};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Geodesic polar coordinates about `e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64) -> Result<Self, GeometryError> {
        if r < 0.0 || r.is_nan() {
            return Err(GeometryError::NegativeRadius(r));
        }
        if !theta.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { r, theta })
    }
}

/// `∫₀^r sinh^{n−1}(s) ds`; closed forms for `n = 2, 3`, adaptive quadrature otherwise.
pub fn sinh_power_integral(n: usize, r: f64) -> Result<f64, QuadError> {
    assert!(n >= 2, "dimension must be at least 2");
    assert!(r >= 0.0, "radius must be non-negative");
    match n {
        2 => Ok(2.0 * (0.5 * r).sinh().powi(2)),
        3 => Ok(sinh_sq_integral(r)),
        _ => {
            let m = (n - 1) as i32;
            integrate(|s: f64| s.sinh().powi(m), 0.0, r, QuadOptions::with_rel(1e-12)).map(|i| i.value)
        }
    }
}

/// `(sinh r cosh r − r)/2 = (sinh 2r − 2r)/4`, by series below `r = 0.5`.
fn sinh_sq_integral(r: f64) -> f64 {
    if r >= 0.5 {
        return 0.5 * (r.sinh() * r.cosh() - r);
    }
    let x = 2.0 * r;
    let x2 = x * x;
    let mut term = x * x2 / 6.0;
    let mut sum = 0.0f64;
    let mut k = 3.0;
    while term > 1e-18 * sum.max(f64::MIN_POSITIVE) {
        sum += term;
        term *= x2 / ((k + 1.0) * (k + 2.0));
        k += 2.0;
    }
    0.25 * sum
}

/// `I(r)` for a fixed dimension, with the normalised quotient `q = I/sinh^{n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadialProfile {
    n: usize,
}

impl RadialProfile {
    pub fn new(n: usize) -> Result<Self, GeometryError> {
        if n < 2 {
            return Err(GeometryError::DimensionTooSmall(n));
        }
        Ok(Self { n })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn integral(&self, r: f64) -> Result<f64, QuadError> {
        sinh_power_integral(self.n, r)
    }

    /// `sinh^{n−1} r`, the area density of `S_r` relative to the unit sphere.
    pub fn area_density(&self, r: f64) -> f64 {
        r.sinh().powi(self.n as i32 - 1)
    }

    /// `(q, q', q'')`. Uses `q' = 1 − (n−1)·coth r·q` (quotient rule with `I' = sinh^{n−1}`)
    /// and its derivative `q'' = (n−1)q/sinh²r − (n−1)·coth r·q'`.
    pub fn quotient(&self, r: f64) -> Result<(f64, f64, f64), QuadError> {
        if r == 0.0 {
            return Ok((0.0, 1.0 / self.n as f64, 0.0));
        }
        if self.n == 2 {
            let t = (0.5 * r).tanh();
            let sech2 = (0.5 * r).cosh().powi(-2);
            return Ok((t, 0.5 * sech2, -0.5 * sech2 * t));
        }
        let m = (self.n - 1) as f64;
        let q = self.integral(r)? / self.area_density(r);
        let coth = 1.0 / r.tanh();
        let dq = 1.0 - m * coth * q;
        let ddq = m * q / r.sinh().powi(2) - m * coth * dq;
        Ok((q, dq, ddq))
    }
}

/// Value and first/second partials of a polar field at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Partials {
    pub value: f64,
    pub dr: f64,
    pub dtheta: f64,
    pub drr: f64,
    pub dthetatheta: f64,
}

/// A real function of `(r, θ)`.
///
/// Implementors with closed-form derivatives override [`ScalarField2::partials`];
/// the default falls back to central differences with step 1e−4.
pub trait ScalarField2 {
    fn value(&self, r: f64, theta: f64) -> f64;

    fn partials(&self, r: f64, theta: f64) -> Partials {
        finite_difference_partials(self, r, theta, 1e-4)
    }
}

/// Central-difference partials with step `h`.
pub fn finite_difference_partials<F: ScalarField2 + ?Sized>(f: &F, r: f64, theta: f64, h: f64) -> Partials {
    let v = f.value(r, theta);
    let (rp, rm) = (f.value(r + h, theta), f.value(r - h, theta));
    let (tp, tm) = (f.value(r, theta + h), f.value(r, theta - h));
    Partials {
        value: v,
        dr: (rp - rm) / (2.0 * h),
        dtheta: (tp - tm) / (2.0 * h),
        drr: (rp - 2.0 * v + rm) / (h * h),
        dthetatheta: (tp - 2.0 * v + tm) / (h * h),
    }
}

/// Field given only by its values; derivatives by finite differences.
pub struct SampledField<F>(pub F);

impl<F: Fn(f64, f64) -> f64> ScalarField2 for SampledField<F> {
    fn value(&self, r: f64, theta: f64) -> f64 {
        (self.0)(r, theta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantField(pub f64);

impl ScalarField2 for ConstantField {
    fn value(&self, _r: f64, _theta: f64) -> f64 {
        self.0
    }

    fn partials(&self, _r: f64, _theta: f64) -> Partials {
        Partials {
            value: self.0,
            dr: 0.0,
            dtheta: 0.0,
            drr: 0.0,
            dthetatheta: 0.0,
        }
    }
}

/// `ln tanh(r/2)`, the radial Green-type harmonic function of ℍ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogTanhField;

impl ScalarField2 for LogTanhField {
    fn value(&self, r: f64, _theta: f64) -> f64 {
        (0.5 * r).tanh().ln()
    }

    fn partials(&self, r: f64, theta: f64) -> Partials {
        let s = r.sinh();
        Partials {
            value: self.value(r, theta),
            dr: 1.0 / s,
            dtheta: 0.0,
            drr: -r.cosh() / (s * s),
            dthetatheta: 0.0,
        }
    }
}

/// `v(r, θ) = (C(n−1)/2)·q(r)·cos θ`: bounded, harmonic, non-constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Counterexample {
    profile: RadialProfile,
    c: f64,
}

impl Counterexample {
    pub fn new(n: usize, c: f64) -> Result<Self, GeometryError> {
        if !(c.is_finite() && c > 0.0) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self {
            profile: RadialProfile::new(n)?,
            c,
        })
    }

    pub fn dim(&self) -> usize {
        self.profile.dim()
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    fn amplitude(&self) -> f64 {
        0.5 * self.c * (self.profile.dim() - 1) as f64
    }

    fn quotient(&self, r: f64) -> (f64, f64, f64) {
        self.profile.quotient(r).expect("sinh power quadrature converges on bounded radii")
    }

    /// `‖∇v‖` as `K²(q'² cos²θ + (q/sinh r)² sin²θ)` under the root; at `r = 0`
    /// the limit `C(n−1)/(2n)`.
    pub fn gradient_norm(&self, r: f64, theta: f64) -> f64 {
        let k = self.amplitude();
        if r == 0.0 {
            return k / self.profile.dim() as f64;
        }
        let (q, dq, _) = self.quotient(r);
        let (sn, cs) = theta.sin_cos();
        let tangential = q / r.sinh();
        k * ((dq * cs).powi(2) + (tangential * sn).powi(2)).sqrt()
    }
}

impl ScalarField2 for Counterexample {
    fn value(&self, r: f64, theta: f64) -> f64 {
        let (q, _, _) = self.quotient(r);
        self.amplitude() * q * theta.cos()
    }

    fn partials(&self, r: f64, theta: f64) -> Partials {
        let k = self.amplitude();
        let (q, dq, ddq) = self.quotient(r);
        let (sn, cs) = theta.sin_cos();
        Partials {
            value: k * q * cs,
            dr: k * dq * cs,
            dtheta: -k * q * sn,
            drr: k * ddq * cs,
            dthetatheta: -k * q * cs,
        }
    }
}

pub fn counterexample(n: usize, c: f64) -> Result<Counterexample, GeometryError> {
    Counterexample::new(n, c)
}

/// Reduced Laplace–Beltrami operator of ℍⁿ applied to `f` at `p`.
pub fn laplace_beltrami<F: ScalarField2 + ?Sized>(f: &F, n: usize, p: PolarPoint) -> Result<f64, GeometryError> {
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall(n));
    }
    if p.r <= 0.0 {
        return Err(GeometryError::AtPole(p.r));
    }
    let sin_t = p.theta.sin();
    if n > 2 && sin_t.abs() < 1e-12 {
        return Err(GeometryError::PolarAxis { n, theta: p.theta });
    }
    let d = f.partials(p.r, p.theta);
    let s2 = p.r.sinh().powi(2);
    let axis = if n > 2 {
        (n - 2) as f64 * p.theta.cos() / sin_t * d.dtheta / s2
    } else {
        0.0
    };
    Ok(d.drr + (n - 1) as f64 / p.r.tanh() * d.dr + axis + d.dthetatheta / s2)
}

/// `‖∇f‖ = √(f_r² + f_θ²/sinh²r)`.
pub fn gradient_norm<F: ScalarField2 + ?Sized>(f: &F, p: PolarPoint) -> Result<f64, GeometryError> {
    if p.r <= 0.0 {
        return Err(GeometryError::AtPole(p.r));
    }
    let d = f.partials(p.r, p.theta);
    Ok((d.dr * d.dr + (d.dtheta / p.r.sinh()).powi(2)).sqrt())
}

/// `e^R · max_j ‖∇f‖(R, θ_j)` over `θ_j = πj/samples`, `j = 0..=samples`.
pub fn decay_indicator<F: ScalarField2 + ?Sized>(f: &F, radius: f64, samples: usize) -> Result<f64, GeometryError> {
    if !(radius > 0.0) {
        return Err(GeometryError::AtPole(radius));
    }
    let samples = samples.max(1);
    let mut sup: f64 = 0.0;
    for j in 0..=samples {
        let theta = PI * j as f64 / samples as f64;
        sup = sup.max(gradient_norm(f, PolarPoint::new(radius, theta)?)?);
    }
    Ok(radius.exp() * sup)
}

/// Half-plane components of the polar tangent vector `a·∂_r + b·∂_θ` at `(r, θ)`.
///
/// Exact differential of [`polar_chart`]: `dz/dw = 2/(1 + iw)²`,
/// `∂w/∂r = ½ sech²(r/2) e^{iθ}`, `∂w/∂θ = i w`.
pub fn polar_pushforward(r: f64, theta: f64, a: f64, b: f64) -> Result<HTangent, GeometryError> {
    let base: HPoint = polar_chart(r, theta)?;
    let i = Complex64::i();
    let dir = Complex64::from_polar(1.0, theta);
    let w = dir * (0.5 * r).tanh();
    let dzdw = 2.0 / (1.0 + i * w).powi(2);
    let half_sech2 = 0.5 / (0.5 * r).cosh().powi(2);
    let dw = a * half_sech2 * dir + b * i * w;
    let dz = dzdw * dw;
    HTangent::new(base, vec![dz.re, dz.im])
}
