//! The affine group acting simply transitively on the half-plane, its adjoint
//! representation, and the largest adjoint norm on a geodesic ball.
//!
//! ```text
//! cargo run --release --example group_adjoint
//! ```

use hyperlie::group::{ad_norm_ball_max, ad_norm_ball_max_numeric, BallSamples, GElem};
use hyperlie::halfspace::{distance, HPoint};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = GElem::planar(3.0, 4.0);
    let h = GElem::planar(-1.0, 0.5);
    println!("g = {:?}", g);
    println!("g·h = {:?}", g.mul(&h));
    println!("g⁻¹ = {:?}", g.inv());

    let (p, q) = (HPoint::planar(0.3, 0.7), HPoint::planar(-2.0, 1.9));
    println!(
        "left translation is an isometry: d(p,q) = {:.12}, d(gp,gq) = {:.12}",
        distance(&p, &q),
        distance(&g.act(&p), &g.act(&q))
    );

    let ad = g.adjoint();
    println!("Ad_g = {:?}", ad.as_slice());
    println!("‖Ad_g‖ = {:.12}", g.ad_norm());
    println!("right-translation norm R(g) = {:.12} = ‖Ad_g⁻¹‖ = {:.12}", g.right_diff_norm(&GElem::identity(2)), g.inv().ad_norm());

    println!("\n  R      sampled max ‖Ad‖     e^R              margin(boundary − interior)");
    for r in [0.5, 1.0, 2.0, 5.0] {
        let found = ad_norm_ball_max_numeric(r, BallSamples::default())?;
        println!(
            "{r:4.1}  {:18.12}  {:16.12}  {:.3e}",
            found.value,
            ad_norm_ball_max(r)?,
            found.boundary_margin()
        );
    }
    Ok(())
}
