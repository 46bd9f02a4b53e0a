//! Exact rotationally symmetric solutions.
//!
//! For `u = u(r)` the equation integrates once to the flux identity
//!
//! ```text
//! sinh^{n−1}(r)·φ(u'(r)) + C·I(r) = A,     φ(s) = sign(s)·a(|s|),
//! ```
//!
//! so `u' = φ⁻¹((A − C·I(r))/sinh^{n−1} r)` and `u(R) − u(r₀)` is strictly
//! increasing in the flux constant `A`, which is found by bisection.

use super::law::FluxLaw;
use crate::error::{QuadError, SolveError};
use crate::polar::RadialProfile;
use crate::quadrature::{integrate, QuadOptions};

const QUAD: QuadOptions = QuadOptions {
    rel_tol: 1e-12,
    abs_tol: 1e-15,
    max_panels: 4000,
};

/// Integrals near the edge of the admissible flux range carry an integrable
/// `(1 − y)^{−1/2}` endpoint singularity; a budget-limited estimate is kept when
/// its error is still below 1e−9 relative.
fn quad<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64, SolveError> {
    match integrate(f, a, b, QUAD) {
        Ok(i) => Ok(i.value),
        Err(QuadError::SubdivisionLimit { value, error }) if error <= 1e-9 * value.abs().max(1.0) => Ok(value),
        Err(e) => Err(e.into()),
    }
}

/// Profile `u(r)` of a radial solution together with its flux constant.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    law: FluxLaw,
    profile: RadialProfile,
    c: f64,
    r_inner: f64,
    r_outer: f64,
    flux: f64,
    u_inner: f64,
    u_outer: f64,
}

/// Solution shape shared by the annulus and disk solvers.
struct Problem {
    law: FluxLaw,
    profile: RadialProfile,
    c: f64,
}

impl Problem {
    /// Signed flux density `(A − C·I(r))/sinh^{n−1} r`.
    fn density(&self, flux: f64, r: f64) -> f64 {
        if r == 0.0 {
            return if flux == 0.0 { 0.0 } else { flux.signum() * f64::INFINITY };
        }
        let (q, _, _) = self.profile.quotient(r).expect("bounded radius");
        flux / self.profile.area_density(r) - self.c * q
    }

    fn slope(&self, flux: f64, r: f64) -> Option<f64> {
        self.law.slope_for_flux(self.density(flux, r))
    }

    /// Radius in `(a, b)` where `A − C·I(r)` changes sign, if any.
    fn turning_point(&self, flux: f64, a: f64, b: f64) -> Option<f64> {
        if self.c == 0.0 {
            return None;
        }
        let g = |r: f64| flux - self.c * self.profile.integral(r).expect("bounded radius");
        let (ga, gb) = (g(a), g(b));
        if ga == 0.0 || gb == 0.0 || ga.signum() == gb.signum() {
            return None;
        }
        let (mut lo, mut hi) = (a, b);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if g(mid).signum() == ga.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(0.5 * (lo + hi))
    }

    /// `∫_a^b u'(r) dr` for flux constant `A`.
    fn rise(&self, flux: f64, a: f64, b: f64) -> Result<f64, SolveError> {
        if a == b {
            return Ok(0.0);
        }
        let integrand = |r: f64| self.slope(flux, r).unwrap_or(f64::NAN);
        match self.turning_point(flux, a.min(b), a.max(b)) {
            Some(mid) => {
                Ok(quad(integrand, a, mid)? + quad(integrand, mid, b)?)
            }
            None => quad(integrand, a, b),
        }
    }
}

/// Admissible flux constants for a law with bounded `a`: `(A_lo, A_hi, r_lo, r_hi)`
/// where the bounds are attained at radii `r_lo`, `r_hi`.
fn admissible_interval(p: &Problem, a: f64, b: f64) -> (f64, f64, f64, f64) {
    let cap = p.law.sup_a();
    let ci = |r: f64| p.c * p.profile.integral(r).expect("bounded radius");
    let upper = |r: f64| ci(r) + cap * p.profile.area_density(r);
    let lower = |r: f64| ci(r) - cap * p.profile.area_density(r);
    let samples = 2000;
    let node = |k: usize| a + (b - a) * k as f64 / samples as f64;
    let (mut k_hi, mut k_lo) = (0, 0);
    let (mut best_hi, mut best_lo) = (upper(a), lower(a));
    for k in 1..=samples {
        let r = node(k);
        let (u, l) = (upper(r), lower(r));
        if u < best_hi {
            best_hi = u;
            k_hi = k;
        }
        if l > best_lo {
            best_lo = l;
            k_lo = k;
        }
    }
    // Golden-section refinement inside the neighbouring cells.
    let refine = |f: &dyn Fn(f64) -> f64, k: usize, sign: f64| -> (f64, f64) {
        let (mut lo, mut hi) = (node(k.saturating_sub(1)), node((k + 1).min(samples)));
        let phi = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..100 {
            let x1 = hi - phi * (hi - lo);
            let x2 = lo + phi * (hi - lo);
            if sign * f(x1) < sign * f(x2) {
                hi = x2;
            } else {
                lo = x1;
            }
        }
        let x = 0.5 * (lo + hi);
        (f(x), x)
    };
    let (v_hi, r_hi) = refine(&upper, k_hi, 1.0);
    let (v_lo, r_lo) = refine(&lower, k_lo, -1.0);
    let (v_hi, r_hi) = if v_hi < best_hi { (v_hi, r_hi) } else { (best_hi, node(k_hi)) };
    let (v_lo, r_lo) = if v_lo > best_lo { (v_lo, r_lo) } else { (best_lo, node(k_lo)) };
    (v_lo, v_hi, r_lo, r_hi)
}

/// Solves the radial problem on the annulus `r₀ ≤ r ≤ R` with Dirichlet data.
pub fn radial_solve(
    law: FluxLaw,
    n: usize,
    c: f64,
    r_inner: f64,
    r_outer: f64,
    u_inner: f64,
    u_outer: f64,
) -> Result<RadialSolution, SolveError> {
    if !(r_inner > 0.0 && r_outer > r_inner && r_outer.is_finite()) {
        return Err(SolveError::Precondition(format!(
            "need 0 < r_inner < r_outer, got [{r_inner}, {r_outer}]"
        )));
    }
    if !(u_inner.is_finite() && u_outer.is_finite() && c.is_finite()) {
        return Err(SolveError::Precondition("boundary values and C must be finite".into()));
    }
    let problem = Problem {
        law,
        profile: RadialProfile::new(n)?,
        c,
    };
    let target = u_outer - u_inner;
    let rise = |flux: f64| problem.rise(flux, r_inner, r_outer);

    let (mut lo, mut hi) = if law.sup_a().is_finite() {
        let (a_lo, a_hi, r_lo, r_hi) = admissible_interval(&problem, r_inner, r_outer);
        if a_lo >= a_hi {
            return Err(SolveError::NoSolution { radius: r_lo });
        }
        let margin = 1e-12 * a_hi.abs().max(a_lo.abs()).max(1.0);
        let (lo, hi) = (a_lo + margin, a_hi - margin);
        if lo >= hi {
            return Err(SolveError::NoSolution { radius: r_lo });
        }
        if rise(hi)? < target {
            return Err(SolveError::NoSolution { radius: r_hi });
        }
        if rise(lo)? > target {
            return Err(SolveError::NoSolution { radius: r_lo });
        }
        (lo, hi)
    } else {
        let scale = problem.c.abs() * problem.profile.integral(r_outer)? + problem.profile.area_density(r_inner);
        let (mut lo, mut hi) = (-scale.max(1.0), scale.max(1.0));
        let mut guard = 0;
        while rise(lo)? > target {
            lo *= 2.0;
            guard += 1;
            if guard > 200 {
                return Err(SolveError::NotConverged {
                    iterations: guard,
                    residual: f64::INFINITY,
                });
            }
        }
        while rise(hi)? < target {
            hi *= 2.0;
            guard += 1;
            if guard > 200 {
                return Err(SolveError::NotConverged {
                    iterations: guard,
                    residual: f64::INFINITY,
                });
            }
        }
        (lo, hi)
    };

    let tol = 1e-13 * target.abs().max(1.0);
    let mut flux = 0.5 * (lo + hi);
    for _ in 0..200 {
        flux = 0.5 * (lo + hi);
        if flux <= lo || flux >= hi {
            break;
        }
        let miss = rise(flux)? - target;
        if miss.abs() <= tol {
            break;
        }
        if miss < 0.0 {
            lo = flux;
        } else {
            hi = flux;
        }
    }
    Ok(RadialSolution {
        law,
        profile: problem.profile,
        c,
        r_inner,
        r_outer,
        flux,
        u_inner,
        u_outer,
    })
}

/// Regular solution on the geodesic disk `r ≤ R`: zero flux through `S_r` as `r → 0`.
pub fn radial_solve_disk(law: FluxLaw, n: usize, c: f64, r_outer: f64, u_outer: f64) -> Result<RadialSolution, SolveError> {
    if !(r_outer > 0.0 && r_outer.is_finite()) {
        return Err(SolveError::Precondition(format!("need R > 0, got {r_outer}")));
    }
    let problem = Problem {
        law,
        profile: RadialProfile::new(n)?,
        c,
    };
    // With A = 0 the density is −C·q(r); q increases to 1/(n−1).
    let cap = law.sup_a();
    if cap.is_finite() {
        let (q, _, _) = problem.profile.quotient(r_outer)?;
        if (c * q).abs() >= cap {
            let (mut lo, mut hi) = (0.0, r_outer);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let (qm, _, _) = problem.profile.quotient(mid)?;
                if (c * qm).abs() >= cap {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Err(SolveError::NoSolution { radius: hi });
        }
    }
    let u_inner = u_outer - problem.rise(0.0, 0.0, r_outer)?;
    Ok(RadialSolution {
        law,
        profile: problem.profile,
        c,
        r_inner: 0.0,
        r_outer,
        flux: 0.0,
        u_inner,
        u_outer,
    })
}

impl RadialSolution {
    fn problem(&self) -> Problem {
        Problem {
            law: self.law,
            profile: self.profile,
            c: self.c,
        }
    }

    pub fn law(&self) -> FluxLaw {
        self.law
    }

    pub fn dim(&self) -> usize {
        self.profile.dim()
    }

    pub fn source(&self) -> f64 {
        self.c
    }

    /// The flux constant `A`.
    pub fn flux_constant(&self) -> f64 {
        self.flux
    }

    pub fn radii(&self) -> (f64, f64) {
        (self.r_inner, self.r_outer)
    }

    pub fn boundary_values(&self) -> (f64, f64) {
        (self.u_inner, self.u_outer)
    }

    /// `u'(r)`; defined for every `r > 0` by the flux identity, not only inside the annulus.
    pub fn slope(&self, r: f64) -> f64 {
        self.problem().slope(self.flux, r).unwrap_or(f64::NAN)
    }

    pub fn gradient_norm(&self, r: f64) -> f64 {
        self.slope(r).abs()
    }

    /// `u(r)` by quadrature of the slope from the nearer boundary ring.
    pub fn value(&self, r: f64) -> Result<f64, SolveError> {
        let p = self.problem();
        if (r - self.r_inner) <= (self.r_outer - r) && self.r_inner > 0.0 {
            Ok(self.u_inner + p.rise(self.flux, self.r_inner, r)?)
        } else {
            Ok(self.u_outer - p.rise(self.flux, r, self.r_outer)?)
        }
    }

    /// `sinh^{n−1}(r)·φ(u'(r)) + C·I(r)`; equals `A` for every `r`.
    pub fn flux_invariant(&self, r: f64) -> Result<f64, SolveError> {
        let s = self.slope(r);
        let phi = self.law.a(s.abs()).copysign(s);
        Ok(self.profile.area_density(r) * phi + self.c * self.profile.integral(r)?)
    }
}
