//! The indicator `e^R·sup_{S_R}|∇u|` separates constants (→0) from the bounded
//! harmonic function and radial annulus solutions (→ a positive limit).
//!
//! ```text
//! cargo run --release --example decay_scan
//! ```

use hyperlie::elliptic::{decay_scan, radial_solve, DecayMember, FluxLaw};
use hyperlie::polar::{counterexample, decay_indicator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = counterexample(2, 1.0)?;
    let radial = radial_solve(FluxLaw::Linear, 2, 0.0, 1.0, 12.0, 0.0, 1.0)?;
    let family = [
        DecayMember::new("constant", |_| 0.0),
        DecayMember::new("harmonic", |r| decay_indicator(&v, r, 4096).unwrap() * (-r).exp()),
        DecayMember::new("radial", |r| radial.gradient_norm(r)),
    ];
    let radii = [4.0, 6.0, 8.0, 10.0, 12.0];
    let table = decay_scan(&family, &radii);
    for row in &table.rows {
        println!("{:<9} R = {:4.1}  {:.10}", row.label, row.r, row.value);
    }
    for (label, class, last) in &table.classes {
        println!("{label:<9} {class}  (last value {last:.8})");
    }
    println!("radial limit 2|A| = {:.8}", 2.0 * radial.flux_constant().abs());
    Ok(())
}
