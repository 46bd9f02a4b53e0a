//! Distances, geodesics and geodesic polar coordinates in the upper half-plane.
//!
//! ```text
//! cargo run --example halfspace_geodesics
//! ```

use hyperlie::halfspace::{distance, geodesic_through, polar_chart, polar_chart_inv, sphere_euclidean, HPoint, HTangent};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = HPoint::origin(2);
    let p = HPoint::planar(3.0, 4.0);
    println!("d(e, (3,4))          = {:.12}", distance(&e, &p));
    println!("arccosh(3.25)        = {:.12}", 3.25f64.acosh());

    // A unit-speed geodesic leaving e at 45 degrees.
    let dir = HTangent::new(e.clone(), vec![1.0, 1.0])?;
    let gamma = geodesic_through(&e, &dir)?;
    println!("\n  tau      x            y            d(e, gamma(tau))");
    for k in 0..=5 {
        let tau = 0.5 * k as f64;
        let q = gamma.eval(tau);
        println!("{tau:5.2}  {:11.6}  {:11.6}  {:11.6}", q.horizontal()[0], q.height(), distance(&e, &q));
    }

    // Geodesic circles about e are Euclidean circles centred at (0, cosh r).
    let r = 1.5;
    let (centre, radius) = sphere_euclidean(r)?;
    println!("\nS_{r}: euclidean centre (0, {centre:.6}), radius {radius:.6}");
    for k in 0..4 {
        let theta = std::f64::consts::FRAC_PI_2 * k as f64;
        let q = polar_chart(r, theta)?;
        let (rr, tt) = polar_chart_inv(&q)?;
        println!(
            "  theta = {theta:.4}: ({:9.6}, {:9.6})  back to (r, theta) = ({rr:.6}, {tt:.6})",
            q.horizontal()[0],
            q.height()
        );
    }
    Ok(())
}
