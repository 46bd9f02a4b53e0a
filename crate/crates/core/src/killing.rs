//! Right-invariant vector fields, their squared norms along geodesics, and the
//! convexity of those norms at critical points.
//!
//! `X(g) = d(R_g)_e(x)` is the right-invariant field with `X(e) = x`. It generates
//! the flow `g ↦ exp(τx)·g` by left translations, so it is a Killing field of the
//! left-invariant metric and its restriction to a geodesic `γ` is a Jacobi field.
//! On ℍⁿ (curvature −1) the Jacobi equation in a parallel frame reads
//! `J'' = J − ⟨J, γ'⟩γ'`, and
//!
//! ```text
//! f(τ) = ‖X(γ(τ))‖²,    f'' = 2(‖J‖² − ⟨γ', J⟩²) + 2‖J'‖² ≥ 0,
//! ```
//!
//! with equality only for `J ∥ γ'` and `J' = 0`. So `f` has no interior maximum.

use crate::error::GeometryError;
use crate::group::GElem;
use crate::halfspace::{christoffel, distance, inner_at, Geodesic, HPoint, HTangent};

/// Right-invariant field determined by `x = (a, b) ∈ T_eℍⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct RightInvField {
    x: Vec<f64>,
}

impl RightInvField {
    pub fn new(x: Vec<f64>) -> Result<Self, GeometryError> {
        if x.len() < 2 {
            return Err(GeometryError::DimensionTooSmall(x.len()));
        }
        if x.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { x })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn at_identity(&self) -> &[f64] {
        &self.x
    }

    /// Coordinate components `(a + b·t, b·s)` at `p = (t, s)`.
    pub fn components_at(&self, p: &HPoint) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(n, p.dim(), "dimension mismatch");
        let b = self.x[n - 1];
        let mut v: Vec<f64> = self.x[..n - 1]
            .iter()
            .zip(p.horizontal())
            .map(|(a, t)| a + b * t)
            .collect();
        v.push(b * p.height());
        v
    }

    pub fn eval(&self, g: &GElem) -> HTangent {
        let p = g.to_point();
        let v = self.components_at(&p);
        HTangent::new(p, v).expect("field components are finite")
    }
}

pub fn field_eval(x: &RightInvField, g: &GElem) -> HTangent {
    x.eval(g)
}

/// `f(τ) = ‖X(γ(τ))‖²` in the metric at `γ(τ)`.
pub fn norm_sq_along(x: &RightInvField, gamma: &Geodesic, tau: f64) -> f64 {
    let p = gamma.eval(tau);
    let v = x.components_at(&p);
    inner_at(&p, &v, &v)
}

/// `‖Ad_{γ(τ)⁻¹}(x)‖²` evaluated at the identity; equals [`norm_sq_along`].
pub fn norm_sq_via_inverse_adjoint(x: &RightInvField, gamma: &Geodesic, tau: f64) -> f64 {
    let g = GElem::from_point(&gamma.eval(tau));
    let w = g.inv().adjoint().apply(&x.x);
    w.iter().map(|c| c * c).sum()
}

/// Covariant derivative `J' = ∇_{γ'}X` along `γ`; `X` is affine with slope `b·I`.
pub fn covariant_derivative_along(x: &RightInvField, gamma: &Geodesic, tau: f64) -> Vec<f64> {
    let p = gamma.eval(tau);
    let vel = gamma.velocity(tau);
    let j = x.components_at(&p);
    let b = x.x[x.dim() - 1];
    let gam = christoffel(&p, &vel, &j);
    vel.iter().zip(&gam).map(|(v, g)| b * v + g).collect()
}

/// Closed-form `f''(τ) = 2(‖J‖² − ⟨γ', J⟩²) + 2‖J'‖²` for curvature −1.
pub fn norm_sq_second_derivative(x: &RightInvField, gamma: &Geodesic, tau: f64) -> f64 {
    let p = gamma.eval(tau);
    let vel = gamma.velocity(tau);
    let j = x.components_at(&p);
    let jp = covariant_derivative_along(x, gamma, tau);
    let along = inner_at(&p, &vel, &j);
    2.0 * (inner_at(&p, &j, &j) - along * along) + 2.0 * inner_at(&p, &jp, &jp)
}

/// Rate of change of `d(p, q)` under the flow of `X`, by central differences
/// with step `eps`. Zero for a Killing field.
pub fn killing_defect(x: &RightInvField, p: &HPoint, q: &HPoint, eps: f64) -> f64 {
    let push = |pt: &HPoint, e: f64| -> HPoint {
        let v = x.components_at(pt);
        let c: Vec<f64> = pt.coords().iter().zip(&v).map(|(a, d)| a + e * d).collect();
        HPoint::from_coords(&c).expect("small flow step stays in the half-space")
    };
    (distance(&push(p, eps), &push(q, eps)) - distance(&push(p, -eps), &push(q, -eps))) / (2.0 * eps)
}

/// Orthonormal frame at `p` whose first vector is the unit vector `first`.
fn adapted_frame(p: &HPoint, first: &[f64]) -> Vec<Vec<f64>> {
    let n = p.dim();
    let s = p.height();
    let mut frame: Vec<Vec<f64>> = vec![first.to_vec()];
    for k in 0..n {
        let mut v = vec![0.0; n];
        v[k] = s;
        for e in &frame {
            let c = inner_at(p, &v, e);
            for (vi, ei) in v.iter_mut().zip(e) {
                *vi -= c * ei;
            }
        }
        let norm = inner_at(p, &v, &v).sqrt();
        if norm > 1e-8 {
            frame.push(v.iter().map(|c| c / norm).collect());
        }
        if frame.len() == n {
            break;
        }
    }
    frame
}

/// Parallel transport of an orthonormal frame along `γ` over `[a, b]`, fixed-step
/// RK4 on `E' = −Γ(γ', E)`. Returns the node parameters and one frame per node;
/// the first frame vector is `γ'(a)`.
pub fn transported_frames(gamma: &Geodesic, a: f64, b: f64, step: f64) -> (Vec<f64>, Vec<Vec<Vec<f64>>>) {
    assert!(b > a && step > 0.0);
    let steps = ((b - a) / step).round().max(1.0) as usize;
    let h = (b - a) / steps as f64;
    let rhs = |tau: f64, e: &[f64]| -> Vec<f64> {
        let p = gamma.eval(tau);
        let vel = gamma.velocity(tau);
        christoffel(&p, &vel, e).into_iter().map(|c| -c).collect()
    };
    let p0 = gamma.eval(a);
    let mut frame = adapted_frame(&p0, &gamma.velocity(a));
    let mut taus = Vec::with_capacity(steps + 1);
    let mut frames = Vec::with_capacity(steps + 1);
    taus.push(a);
    frames.push(frame.clone());
    for k in 0..steps {
        let t0 = a + k as f64 * h;
        for e in frame.iter_mut() {
            let k1 = rhs(t0, e);
            let y2: Vec<f64> = e.iter().zip(&k1).map(|(y, d)| y + 0.5 * h * d).collect();
            let k2 = rhs(t0 + 0.5 * h, &y2);
            let y3: Vec<f64> = e.iter().zip(&k2).map(|(y, d)| y + 0.5 * h * d).collect();
            let k3 = rhs(t0 + 0.5 * h, &y3);
            let y4: Vec<f64> = e.iter().zip(&k3).map(|(y, d)| y + h * d).collect();
            let k4 = rhs(t0 + h, &y4);
            for i in 0..e.len() {
                e[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
        }
        taus.push(a + (k + 1) as f64 * h);
        frames.push(frame.clone());
    }
    (taus, frames)
}

/// Largest Jacobi-equation residual of `X∘γ` on `[a, b]`.
///
/// Components of `J = X(γ(τ))` in a parallel frame are differenced twice with
/// the transport step and compared with `J − ⟨J, γ'⟩γ'`.
pub fn jacobi_residual(x: &RightInvField, gamma: &Geodesic, a: f64, b: f64, step: f64) -> f64 {
    let (taus, frames) = transported_frames(gamma, a, b, step);
    let h = taus[1] - taus[0];
    let comps: Vec<Vec<f64>> = taus
        .iter()
        .zip(&frames)
        .map(|(&tau, frame)| {
            let p = gamma.eval(tau);
            let j = x.components_at(&p);
            frame.iter().map(|e| inner_at(&p, &j, e)).collect()
        })
        .collect();
    let mut worst: f64 = 0.0;
    for k in 1..taus.len() - 1 {
        for i in 0..comps[k].len() {
            let second = (comps[k + 1][i] - 2.0 * comps[k][i] + comps[k - 1][i]) / (h * h);
            // frame[0] is γ', so ⟨J, γ'⟩γ' only touches component 0.
            let expected = if i == 0 { 0.0 } else { comps[k][i] };
            worst = worst.max((second - expected).abs());
        }
    }
    worst
}

/// Central-difference estimate of `f'` used by [`critical_scan`].
fn slope(x: &RightInvField, gamma: &Geodesic, tau: f64) -> f64 {
    let h = 1e-5;
    (norm_sq_along(x, gamma, tau + h) - norm_sq_along(x, gamma, tau - h)) / (2.0 * h)
}

/// Critical points of `f` on `[a, b]`: sign changes of the central-difference
/// slope on a uniform grid of `grid` cells, refined by bisection to width 1e−10.
pub fn critical_scan(x: &RightInvField, gamma: &Geodesic, a: f64, b: f64, grid: usize) -> Vec<f64> {
    assert!(b > a && grid > 0);
    let node = |k: usize| a + (b - a) * k as f64 / grid as f64;
    let mut found = Vec::new();
    let mut prev = slope(x, gamma, a);
    for k in 1..=grid {
        let (lo0, hi0) = (node(k - 1), node(k));
        let cur = slope(x, gamma, hi0);
        if prev == 0.0 {
            found.push(lo0);
        } else if prev.signum() != cur.signum() && cur != 0.0 {
            let (mut lo, mut hi, mut f_lo) = (lo0, hi0, prev);
            while hi - lo > 1e-10 {
                let mid = 0.5 * (lo + hi);
                let f_mid = slope(x, gamma, mid);
                if f_mid.signum() == f_lo.signum() {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            found.push(0.5 * (lo + hi));
        }
        prev = cur;
    }
    if prev == 0.0 {
        found.push(b);
    }
    found
}

/// `f''(τ)` by Richardson extrapolation of central second differences (steps 1e−3, 5e−4).
pub fn convexity_at(x: &RightInvField, gamma: &Geodesic, tau: f64) -> f64 {
    let f = |t: f64| norm_sq_along(x, gamma, t);
    let f0 = f(tau);
    let d2 = |h: f64| (f(tau + h) - 2.0 * f0 + f(tau - h)) / (h * h);
    let h = 1e-3;
    (4.0 * d2(0.5 * h) - d2(h)) / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfspace::geodesic_through;
    use approx::assert_abs_diff_eq;

    fn geo(p: HPoint, v: Vec<f64>) -> Geodesic {
        geodesic_through(&p.clone(), &HTangent::new(p, v).unwrap()).unwrap()
    }

    #[test]
    fn field_at_identity_is_x() {
        let x = RightInvField::new(vec![0.3, -0.2, 1.5]).unwrap();
        let v = x.eval(&GElem::identity(3));
        assert_eq!(v.components(), x.at_identity());
    }

    #[test]
    fn horizontal_field_on_vertical_axis() {
        let x = RightInvField::new(vec![1.0, 0.0]).unwrap();
        for &tau in &[-2.0, 0.0, 0.7, 3.0] {
            let g = GElem::planar(0.0, f64::exp(tau));
            let v = x.eval(&g);
            assert_eq!(v.components(), &[1.0, 0.0]);
            assert_abs_diff_eq!(v.norm().powi(2), (-2.0 * tau).exp(), epsilon = 1e-12);
        }
    }

    #[test]
    fn closed_form_norm_profiles() {
        let e = HPoint::origin(2);
        let arc = geo(e.clone(), vec![1.0, 0.0]);
        let up = RightInvField::new(vec![0.0, 1.0]).unwrap();
        let vert = geo(e, vec![0.0, 1.0]);
        let side = RightInvField::new(vec![1.0, 0.0]).unwrap();
        for &tau in &[-2.5, -0.4, 0.0, 1.3, 2.0] {
            assert_abs_diff_eq!(norm_sq_along(&up, &arc, tau), tau.cosh().powi(2), epsilon = 1e-12 * tau.cosh().powi(2));
            assert_abs_diff_eq!(norm_sq_along(&side, &vert, tau), (-2.0 * tau).exp(), epsilon = 1e-12 * (-2.0 * tau).exp());
        }
        assert_abs_diff_eq!(norm_sq_along(&side, &arc, 0.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn inverse_adjoint_identity() {
        let p = HPoint::new(vec![0.4, -1.0], 0.6).unwrap();
        let gamma = geo(p, vec![0.2, 0.5, -0.3]);
        let x = RightInvField::new(vec![1.0, 2.0, -0.5]).unwrap();
        for k in -20..=20 {
            let tau = 0.15 * k as f64;
            let a = norm_sq_along(&x, &gamma, tau);
            let b = norm_sq_via_inverse_adjoint(&x, &gamma, tau);
            assert!((a - b).abs() <= 1e-10 * a.max(1.0));
        }
    }

    #[test]
    fn killing_defect_vanishes() {
        let x = RightInvField::new(vec![0.7, -1.3]).unwrap();
        let p = HPoint::planar(0.2, 0.9);
        let q = HPoint::planar(-1.5, 2.4);
        assert!(killing_defect(&x, &p, &q, 1e-4).abs() < 1e-6);
        // A non-Killing perturbation is detected: the Euclidean field (0, s²).
        let push = |pt: &HPoint, e: f64| HPoint::planar(pt.horizontal()[0], pt.height() + e * pt.height().powi(2));
        let d = (distance(&push(&p, 1e-4), &push(&q, 1e-4)) - distance(&push(&p, -1e-4), &push(&q, -1e-4))) / 2e-4;
        assert!(d.abs() > 1e-2);
    }

    #[test]
    fn jacobi_residual_is_small() {
        let gamma = geo(HPoint::planar(0.3, 1.4), vec![0.6, -0.8]);
        let x = RightInvField::new(vec![0.5, 1.0]).unwrap();
        assert!(jacobi_residual(&x, &gamma, -1.0, 1.0, 1e-3) < 1e-5);
        let gamma = geo(HPoint::new(vec![0.0, 1.0], 0.5).unwrap(), vec![1.0, 1.0, 1.0]);
        let x = RightInvField::new(vec![0.5, -0.4, 1.0]).unwrap();
        assert!(jacobi_residual(&x, &gamma, 0.0, 1.0, 1e-3) < 1e-5);
    }

    #[test]
    fn transported_frame_stays_orthonormal() {
        let gamma = geo(HPoint::new(vec![0.0, 1.0], 0.5).unwrap(), vec![1.0, -2.0, 1.0]);
        let (taus, frames) = transported_frames(&gamma, 0.0, 2.0, 1e-3);
        let (tau, frame) = (taus.last().unwrap(), frames.last().unwrap());
        let p = gamma.eval(*tau);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(inner_at(&p, &frame[i], &frame[j]), want, epsilon = 1e-10);
            }
        }
        let vel = gamma.velocity(*tau);
        for (a, b) in frame[0].iter().zip(&vel) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn critical_points_and_convexity() {
        let arc = geo(HPoint::origin(2), vec![1.0, 0.0]);
        let up = RightInvField::new(vec![0.0, 1.0]).unwrap();
        let crit = critical_scan(&up, &arc, -3.0, 3.0, 601);
        assert_eq!(crit.len(), 1);
        assert!(crit[0].abs() < 1e-8);
        assert_abs_diff_eq!(convexity_at(&up, &arc, crit[0]), 2.0, epsilon = 1e-6);
        assert_abs_diff_eq!(norm_sq_second_derivative(&up, &arc, 0.0), 2.0, epsilon = 1e-12);

        let vert = geo(HPoint::origin(2), vec![0.0, 1.0]);
        let side = RightInvField::new(vec![1.0, 0.0]).unwrap();
        assert!(critical_scan(&side, &vert, -3.0, 3.0, 600).is_empty());
    }

    #[test]
    fn analytic_second_derivative_matches_differences() {
        let gamma = geo(HPoint::new(vec![0.2, -0.1], 1.7).unwrap(), vec![0.3, 0.9, -0.4]);
        let x = RightInvField::new(vec![-0.6, 0.8, 0.4]).unwrap();
        for &tau in &[-1.0, 0.0, 0.5, 1.5] {
            let a = norm_sq_second_derivative(&x, &gamma, tau);
            let fd = convexity_at(&x, &gamma, tau);
            assert!((a - fd).abs() < 1e-6 * a.max(1.0), "{a} vs {fd}");
        }
    }
}
