use serde::{Deserialize, Serialize};

/// Regularisation of the p-Laplace coefficient `(g² + ε²)^{(p−2)/2}` at vanishing gradient.
pub const PLAPLACE_EPS: f64 = 1e-12;

/// The monotone flux law `a(s)` of `div(a(‖∇u‖)/‖∇u‖ · ∇u) + C = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum FluxLaw {
    /// `a(s) = s`
    Linear,
    /// `a(s) = s^{p−1}`, `p > 1`
    PLaplace { p: f64 },
    /// `a(s) = s/√(1+s²)`
    MinimalSurface,
}

impl FluxLaw {
    pub fn name(&self) -> String {
        match self {
            FluxLaw::Linear => "linear".into(),
            FluxLaw::PLaplace { p } => format!("p-laplace(p={p})"),
            FluxLaw::MinimalSurface => "mse".into(),
        }
    }

    pub fn a(&self, s: f64) -> f64 {
        match *self {
            FluxLaw::Linear => s,
            FluxLaw::PLaplace { p } => s.powf(p - 1.0),
            FluxLaw::MinimalSurface => s / (1.0 + s * s).sqrt(),
        }
    }

    pub fn a_prime(&self, s: f64) -> f64 {
        match *self {
            FluxLaw::Linear => 1.0,
            FluxLaw::PLaplace { p } => (p - 1.0) * s.powf(p - 2.0),
            FluxLaw::MinimalSurface => (1.0 + s * s).powf(-1.5),
        }
    }

    /// `sup a` over `[0, ∞)`.
    pub fn sup_a(&self) -> f64 {
        match self {
            FluxLaw::MinimalSurface => 1.0,
            _ => f64::INFINITY,
        }
    }

    /// Inverse of `a` on `[0, sup a)`; `None` outside.
    pub fn a_inv(&self, y: f64) -> Option<f64> {
        if !(y >= 0.0) || y >= self.sup_a() {
            return None;
        }
        Some(match *self {
            FluxLaw::Linear => y,
            FluxLaw::PLaplace { p } => y.powf(1.0 / (p - 1.0)),
            FluxLaw::MinimalSurface => y / ((1.0 - y) * (1.0 + y)).sqrt(),
        })
    }

    /// Odd extension `φ⁻¹(y) = sign(y)·a⁻¹(|y|)`: the slope carrying signed flux density `y`.
    pub fn slope_for_flux(&self, y: f64) -> Option<f64> {
        self.a_inv(y.abs()).map(|s| s.copysign(y))
    }

    /// Diffusion coefficient `κ = a(g)/g` as a function of `g²`.
    pub fn kappa(&self, g2: f64) -> f64 {
        match *self {
            FluxLaw::Linear => 1.0,
            FluxLaw::PLaplace { p } => (g2 + PLAPLACE_EPS * PLAPLACE_EPS).powf(0.5 * (p - 2.0)),
            FluxLaw::MinimalSurface => 1.0 / (1.0 + g2).sqrt(),
        }
    }

    /// `dκ/d(g²)`.
    pub fn kappa_prime(&self, g2: f64) -> f64 {
        match *self {
            FluxLaw::Linear => 0.0,
            FluxLaw::PLaplace { p } => {
                0.5 * (p - 2.0) * (g2 + PLAPLACE_EPS * PLAPLACE_EPS).powf(0.5 * (p - 2.0) - 1.0)
            }
            FluxLaw::MinimalSurface => -0.5 * (1.0 + g2).powf(-1.5),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LAWS: [FluxLaw; 4] = [
        FluxLaw::Linear,
        FluxLaw::PLaplace { p: 1.5 },
        FluxLaw::PLaplace { p: 3.0 },
        FluxLaw::MinimalSurface,
    ];

    #[test]
    fn inverse_round_trip_and_monotonicity() {
        for law in LAWS {
            assert_eq!(law.a(0.0), 0.0);
            let mut prev = 0.0;
            for k in 1..200 {
                let s = 0.05 * k as f64;
                let y = law.a(s);
                assert!(y > prev);
                prev = y;
                let back = law.a_inv(y).unwrap();
                assert!((back - s).abs() <= 1e-12 * s.max(1.0), "{law:?} s={s} back={back}");
            }
        }
    }

    #[test]
    fn mse_inverse_domain() {
        let law = FluxLaw::MinimalSurface;
        assert!(law.a_inv(1.0).is_none());
        assert!(law.a_inv(-0.1).is_none());
        assert!((law.slope_for_flux(-0.6).unwrap() + 0.75).abs() < 1e-15);
        assert_eq!(FluxLaw::PLaplace { p: 3.0 }.sup_a(), f64::INFINITY);
    }

    #[test]
    fn kappa_and_derivatives_are_consistent() {
        for law in LAWS {
            for &g in &[0.3, 1.0, 2.5] {
                let g2: f64 = g * g;
                assert!((law.kappa(g2) * g - law.a(g)).abs() < 1e-12);
                let h = 1e-6;
                let fd = (law.kappa(g2 + h) - law.kappa(g2 - h)) / (2.0 * h);
                assert!((fd - law.kappa_prime(g2)).abs() < 1e-7);
                let fd = (law.a(g + h) - law.a(g - h)) / (2.0 * h);
                assert!((fd - law.a_prime(g)).abs() < 1e-7);
            }
        }
    }
}
