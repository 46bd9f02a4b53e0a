//! A bounded, non-constant harmonic function on hyperbolic space whose
//! gradient decays exactly like `C·e^{-R}` on spheres of radius `R`.
//!
//! ```text
//! cargo run --release --example harmonic_counterexample
//! ```

use hyperlie::polar::{counterexample, decay_indicator, laplace_beltrami, PolarPoint, ScalarField2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = 1.0;
    for n in [2, 3, 4] {
        let v = counterexample(n, c)?;
        let mut lap: f64 = 0.0;
        for i in 0..200 {
            for j in 0..64 {
                let p = PolarPoint::new(0.1 + 0.06 * i as f64, std::f64::consts::PI * (j as f64 + 0.5) / 64.0)?;
                lap = lap.max(laplace_beltrami(&v, n, p)?.abs());
            }
        }
        println!("n = {n}: max |Δv| on the sample grid = {lap:.2e}, v(5,0) = {:.6}", v.value(5.0, 0.0));
        for r in [2.0, 4.0, 6.0, 8.0, 10.0] {
            println!("    R = {r:4.1}  e^R·sup‖∇v‖ = {:.10}", decay_indicator(&v, r, 4096)?);
        }
    }
    let r: f64 = 10.0;
    println!("closed form at n = 2, R = 10: {:.10}", c / (1.0 + 2.0 * (-r).exp() + (-2.0 * r).exp()));
    Ok(())
}
