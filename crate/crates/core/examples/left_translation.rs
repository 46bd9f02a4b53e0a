//! Left translations are isometries, so translating a solution gives another
//! solution; the discrete residual of the translate stays at discretisation level.
//!
//! ```text
//! cargo run --release --example left_translation
//! ```

use hyperlie::elliptic::{left_translate_check, radial_solve, AnnulusGrid, DiscreteField, FluxLaw};
use hyperlie::group::GElem;
use hyperlie::polar::{counterexample, ScalarField2};
use hyperlie::verify::{random_translation, sample_radial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = AnnulusGrid::annulus(1.0, 2.0, 128, 804)?;
    let v = counterexample(2, 1.0)?;
    let harmonic = DiscreteField::from_fn(&grid, |r, t| v.value(r, t));
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..3 {
        let z = random_translation(&mut rng, 0.2);
        let rep = left_translate_check(&harmonic, &grid, FluxLaw::Linear, 0.0, &z, None)?;
        println!(
            "harmonic, z = ({:+.4}, {:.4}): baseline {:.2e}, translated {:.2e} on {} cells",
            z.translation()[0],
            z.scale(),
            rep.baseline,
            rep.translated,
            rep.overlap
        );
    }

    let law = FluxLaw::PLaplace { p: 3.0 };
    let u = sample_radial(&grid, &radial_solve(law, 2, 1.0, 1.0, 2.0, 0.0, 1.0)?)?;
    for s in [0.9, 1.1] {
        let rep = left_translate_check(&u, &grid, law, 1.0, &GElem::planar(0.0, s), None)?;
        println!("p = 3 radial, vertical z = (0, {s}): baseline {:.2e}, translated {:.2e}", rep.baseline, rep.translated);
    }
    Ok(())
}
