//! Acceptance suite: one PASS/FAIL line per criterion, with wall-time limits.
//!
//! Expected values come from closed forms or from oracles written here,
//! independent of the library code under test.

use hyperlie::elliptic::{
    classify_decay, comparison_check, decay_scan, fd_solve, gradient_bound_check, left_translate_check, radial_solve,
    AnnulusGrid, DecayClass, DecayMember, DiscreteField, FluxLaw, RadialSolution, SolverParams,
};
use hyperlie::error::SolveError;
use hyperlie::group::{ad_norm_ball_max_numeric, BallSamples, GElem};
use hyperlie::halfspace::{geodesic_through, polar_chart, HPoint, HTangent};
use hyperlie::killing::{critical_scan, norm_sq_along, norm_sq_second_derivative, RightInvField};
use hyperlie::polar::{counterexample, decay_indicator, gradient_norm, laplace_beltrami, PolarPoint, ScalarField2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

// ---------------------------------------------------------------- oracles

/// Half-plane distance from the arccosh formula.
fn dist(p: &[f64], q: &[f64]) -> f64 {
    let n = p.len();
    let e2: f64 = p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum();
    (1.0 + e2 / (2.0 * p[n - 1] * q[n - 1])).acosh()
}

/// Largest singular value of a square matrix by power iteration on `MᵀM`.
fn sigma_max(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..500 {
        let y: Vec<f64> = (0..n).map(|i| (0..n).map(|j| m[i][j] * x[j]).sum()).collect();
        let z: Vec<f64> = (0..n).map(|j| (0..n).map(|i| m[i][j] * y[i]).sum()).collect();
        let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
        lambda = norm / x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x = z.iter().map(|v| v / norm).collect();
    }
    lambda.sqrt()
}

/// Norm of `d(R_g)` at `h` between the metrics `I/s_h²` and `I/s_{hg}²`, from
/// the coordinate Jacobian of `x ↦ x·g`.
fn right_translation_norm(t_g: &[f64], s_g: f64, s_h: f64) -> f64 {
    let n = t_g.len() + 1;
    let mut jac = vec![vec![0.0; n]; n];
    for i in 0..n - 1 {
        jac[i][i] = 1.0;
        jac[i][n - 1] = t_g[i];
    }
    jac[n - 1][n - 1] = s_g;
    sigma_max(&jac) * s_h / (s_h * s_g)
}

/// `‖Ad_g‖` from the matrix `[[s·I, −t], [0, 1]]`.
fn adjoint_norm(t: &[f64], s: f64) -> f64 {
    let n = t.len() + 1;
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n - 1 {
        m[i][i] = s;
        m[i][n - 1] = -t[i];
    }
    m[n - 1][n - 1] = 1.0;
    sigma_max(&m)
}

fn random_elem(rng: &mut ChaCha8Rng, n: usize) -> GElem {
    let t = (0..n - 1).map(|_| rng.gen_range(-3.0..3.0)).collect();
    GElem::new(t, rng.gen_range(-2.0f64..2.0).exp()).unwrap()
}

fn coords(g: &GElem) -> Vec<f64> {
    g.to_point().coords()
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn max_entry_diff(a: &GElem, b: &GElem) -> f64 {
    coords(a)
        .iter()
        .zip(coords(b))
        .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
        .fold(0.0, f64::max)
}

/// Data `inner(θ)` on ring 0 and `outer(θ)` on the outer ring.
fn ring_data(grid: &AnnulusGrid, inner: impl Fn(f64) -> f64, outer: impl Fn(f64) -> f64) -> DiscreteField {
    DiscreteField::from_fn(grid, |r, t| if r < grid.r_outer() - 0.5 * grid.hr() { inner(t) } else { outer(t) })
}

fn nodal_error(grid: &AnnulusGrid, u: &DiscreteField, exact: &RadialSolution) -> f64 {
    let mut err: f64 = 0.0;
    for i in 0..grid.rings() {
        let want = exact.value(grid.r(i)).unwrap();
        for &v in u.ring(i) {
            err = err.max((v - want).abs());
        }
    }
    err
}

// --------------------------------------------------------------- criteria

fn adjoint_ball_maximum() -> Outcome {
    let mut worst_rel: f64 = 0.0;
    let mut worst_arg: f64 = 0.0;
    for r in [0.5f64, 1.0, 2.0, 5.0] {
        let found = ad_norm_ball_max_numeric(
            r,
            BallSamples {
                shells: 100,
                per_shell: 10_000,
            },
        )
        .unwrap();
        worst_rel = worst_rel.max(rel_diff(found.value, r.cosh() + r.sinh()));
        let a = found.argmax.coords();
        worst_arg = worst_arg.max((a[0].powi(2) + (a[1] - r.exp()).powi(2)).sqrt());
    }
    Outcome::new(
        worst_rel <= 1e-6 && worst_arg <= 1e-2,
        format!("max rel err {worst_rel:.2e} (tol 1e-6), max argmax offset {worst_arg:.2e} (tol 1e-2)"),
    )
}

fn right_translation_norms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut pass = true;

    // Independence of the base point.
    let mut spread: f64 = 0.0;
    for _ in 0..10 {
        let g = random_elem(&mut rng, 2);
        let first = g.right_diff_norm(&random_elem(&mut rng, 2));
        for _ in 0..100 {
            let h = random_elem(&mut rng, 2);
            spread = spread.max(rel_diff(g.right_diff_norm(&h), first));
            spread = spread.max(rel_diff(
                g.right_diff_norm(&h),
                right_translation_norm(g.translation(), g.scale(), h.scale()),
            ));
        }
    }
    pass &= spread <= 1e-12;

    // R(g) = ‖Ad_g‖ as stated, and R(g) = ‖Ad_{g⁻¹}‖.
    let mut literal: f64 = 0.0;
    let mut literal_bad = 0;
    let mut corrected: f64 = 0.0;
    for _ in 0..1000 {
        let g = random_elem(&mut rng, 2);
        let r = g.right_diff_norm(&GElem::identity(2));
        let e = rel_diff(r, adjoint_norm(g.translation(), g.scale()));
        literal = literal.max(e);
        if e > 1e-12 {
            literal_bad += 1;
        }
        let gi = g.inv();
        corrected = corrected.max(rel_diff(r, adjoint_norm(gi.translation(), gi.scale())));
    }
    pass &= literal <= 1e-12;

    // d(ag, bg) ≤ R(g)·d(a, b) and d(a, b) ≤ R(g⁻¹)·d(ag, bg).
    let mut violation: f64 = 0.0;
    for _ in 0..1000 {
        let (a, b, g) = (random_elem(&mut rng, 2), random_elem(&mut rng, 2), random_elem(&mut rng, 2));
        let e = GElem::identity(2);
        let dab = dist(&coords(&a), &coords(&b));
        let dg = dist(&coords(&a.mul(&g)), &coords(&b.mul(&g)));
        violation = violation.max(dg - g.right_diff_norm(&e) * dab);
        violation = violation.max(dab - g.inv().right_diff_norm(&e) * dg);
    }
    pass &= violation <= 1e-10;

    // d(e, g) = d(e, g⁻¹).
    let mut sym: f64 = 0.0;
    let origin = HPoint::origin(2).coords();
    for _ in 0..1000 {
        let g = random_elem(&mut rng, 2);
        sym = sym.max((dist(&origin, &coords(&g)) - dist(&origin, &coords(&g.inv()))).abs());
    }
    pass &= sym <= 1e-10;

    Outcome::new(
        pass,
        format!(
            "base-point spread {spread:.1e}; R(g) = ‖Ad_g‖: max rel err {literal:.2e}, {literal_bad}/1000 over 1e-12 \
             [R(g) = ‖Ad_g⁻¹‖: {corrected:.1e}]; inequality excess {violation:.1e}; d(e,g) − d(e,g⁻¹) {sym:.1e}"
        ),
    )
}

fn group_and_isometry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut axioms: f64 = 0.0;
    let mut isometry: f64 = 0.0;
    let mut hom: f64 = 0.0;
    for k in 0..1000 {
        let n = 2 + k % 2;
        let (g, h, w) = (random_elem(&mut rng, n), random_elem(&mut rng, n), random_elem(&mut rng, n));
        let e = GElem::identity(n);
        axioms = axioms
            .max(max_entry_diff(&g.mul(&h).mul(&w), &g.mul(&h.mul(&w))))
            .max(max_entry_diff(&g.mul(&e), &g))
            .max(max_entry_diff(&e.mul(&g), &g))
            .max(max_entry_diff(&g.mul(&g.inv()), &e))
            .max(max_entry_diff(&g.inv().mul(&g), &e));

        let (p, q) = (random_elem(&mut rng, n).to_point(), random_elem(&mut rng, n).to_point());
        let before = dist(&p.coords(), &q.coords());
        let after = dist(&g.act(&p).coords(), &g.act(&q).coords());
        isometry = isometry.max((after - before).abs());

        let lhs = g.mul(&h).adjoint();
        let rhs = g.adjoint().matmul(&h.adjoint());
        let scale = lhs.as_slice().iter().fold(1.0f64, |m, v| m.max(v.abs()));
        hom = hom.max(lhs.max_abs_diff(&rhs) / scale);
    }
    Outcome::new(
        axioms <= 1e-12 && isometry <= 1e-10 && hom <= 1e-12,
        format!("group axioms {axioms:.1e} (1e-12), isometry {isometry:.1e} (1e-10), Ad homomorphism {hom:.1e} (1e-12)"),
    )
}

fn adjoint_strong_maximum() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    let mut tries = 0;
    let mut min_analytic = f64::INFINITY;
    let mut min_numeric = f64::INFINITY;
    while found < 100 && tries < 10_000 {
        tries += 1;
        let x = RightInvField::new(vec![rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)]).unwrap();
        let p = HPoint::planar(rng.gen_range(-2.0..2.0), rng.gen_range(-1.0f64..1.0).exp());
        let phi: f64 = rng.gen_range(0.0..TAU);
        let gamma = geodesic_through(&p, &HTangent::new(p.clone(), vec![phi.cos(), phi.sin()]).unwrap()).unwrap();
        for tau in critical_scan(&x, &gamma, -3.0, 3.0, 600) {
            found += 1;
            min_analytic = min_analytic.min(norm_sq_second_derivative(&x, &gamma, tau));
            let h = 1e-3;
            let f = |s: f64| norm_sq_along(&x, &gamma, s);
            let fd = (f(tau + h) - 2.0 * f(tau) + f(tau - h)) / (h * h);
            min_numeric = min_numeric.min(fd);
        }
    }
    let margin = ad_norm_ball_max_numeric(2.0, BallSamples::default()).unwrap().boundary_margin();
    Outcome::new(
        found >= 100 && min_analytic >= 1e-6 && min_numeric >= 1e-6 && margin > 0.0,
        format!(
            "{found} critical points in {tries} pairs, min second derivative {min_analytic:.4e} \
             (finite differences {min_numeric:.4e}); B_2 boundary margin {margin:.4e}"
        ),
    )
}

fn harmonic_counterexample() -> Outcome {
    let c = 1.0;
    let mut lap: f64 = 0.0;
    for n in [2, 3, 4] {
        let v = counterexample(n, c).unwrap();
        for i in 0..200 {
            let r = 0.1 + 11.9 * i as f64 / 199.0;
            for j in 0..64 {
                let p = PolarPoint::new(r, PI * (j as f64 + 0.5) / 64.0).unwrap();
                lap = lap.max(laplace_beltrami(&v, n, p).unwrap().abs());
            }
        }
    }
    let v2 = counterexample(2, c).unwrap();
    let mut identity: f64 = 0.0;
    for i in 0..200 {
        let r = 0.1 + 11.9 * i as f64 / 199.0;
        for j in 0..64 {
            let g = gradient_norm(&v2, PolarPoint::new(r, TAU * j as f64 / 64.0).unwrap()).unwrap();
            identity = identity.max(rel_diff(g, c / (2.0 * (1.0 + r.cosh()))));
        }
    }
    let r: f64 = 10.0;
    let want = c / (1.0 + 2.0 * (-r).exp() + (-2.0 * r).exp());
    let ind2 = decay_indicator(&v2, r, 4096).unwrap();
    let ind3 = decay_indicator(&counterexample(3, c).unwrap(), 8.0, 4096).unwrap();
    Outcome::new(
        lap <= 1e-9 && identity <= 1e-12 && (ind2 - want).abs() <= 1e-4 && rel_diff(ind3, c) <= 1e-2,
        format!(
            "max |Δv| {lap:.1e} (1e-9); gradient identity {identity:.1e} (1e-12); \
             n=2 R=10 indicator err {:.1e} (1e-4); n=3 R=8 rel err {:.1e} (1e-2)",
            (ind2 - want).abs(),
            rel_diff(ind3, c)
        ),
    )
}

fn radial_flux_law() -> Outcome {
    let mut drift: f64 = 0.0;
    for law in [FluxLaw::Linear, FluxLaw::PLaplace { p: 1.5 }, FluxLaw::PLaplace { p: 3.0 }, FluxLaw::MinimalSurface] {
        for c in [0.0, 0.1] {
            let sol = radial_solve(law, 2, c, 1.0, 2.0, 0.0, 0.3).unwrap();
            // sinh r·a(|u′|)·sign u′ + C·(cosh r − 1), from the slope alone.
            let flux = |r: f64| {
                let s = sol.slope(r);
                r.sinh() * law.a(s.abs()).copysign(s) + c * (r.cosh() - 1.0)
            };
            let f0 = flux(1.0);
            for k in 1..=200 {
                drift = drift.max((flux(1.0 + k as f64 / 200.0) - f0).abs());
            }
        }
    }
    let l = |x: f64| (0.5 * x).tanh().ln();
    let lin = radial_solve(FluxLaw::Linear, 2, 0.0, 1.0, 2.0, 0.0, 1.0).unwrap();
    let mut profile: f64 = 0.0;
    for k in 0..=200 {
        let r = 1.0 + k as f64 / 200.0;
        profile = profile.max((lin.value(r).unwrap() - (l(r) - l(1.0)) / (l(2.0) - l(1.0))).abs());
    }
    let none = radial_solve(FluxLaw::MinimalSurface, 2, 0.0, 0.05, 2.0, 0.0, 50.0);
    let (none_ok, none_text) = match none {
        Err(SolveError::NoSolution { radius }) => (true, format!("no solution at r = {radius}")),
        other => (false, format!("{other:?}")),
    };
    Outcome::new(
        drift <= 1e-10 && profile <= 1e-10 && none_ok,
        format!("flux drift {drift:.1e} (1e-10); ln tanh profile err {profile:.1e} (1e-10); mse jump 50: {none_text}"),
    )
}

fn solver_consistency() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (law, c) in [(FluxLaw::Linear, 0.0), (FluxLaw::PLaplace { p: 3.0 }, 1.0)] {
        let exact = radial_solve(law, 2, c, 1.0, 2.0, 0.0, 1.0).unwrap();
        let mut errs = Vec::new();
        let mut res: f64 = 0.0;
        for n in [64, 128] {
            let grid = AnnulusGrid::annulus(1.0, 2.0, n, n).unwrap();
            let sol = fd_solve(&grid, law, c, &ring_data(&grid, |_| 0.0, |_| 1.0), &SolverParams::default()).unwrap();
            errs.push(nodal_error(&grid, &sol.field, &exact));
            res = res.max(sol.residual);
        }
        let order = (errs[0] / errs[1]).log2();
        pass &= (1.9..=2.1).contains(&order) && res <= 1e-10;
        detail.push(format!("{}: order {order:.4}, residual {res:.1e}", law.name()));
    }
    Outcome::new(pass, detail.join("; "))
}

struct ComparisonTally {
    violations: usize,
    worst_margin: f64,
    bound_failures: usize,
    instances: usize,
    ratio_range: (f64, f64),
}

fn trig(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let c: Vec<f64> = (0..7).map(|_| rng.gen_range(-0.2..0.2)).collect();
    move |t| c[0] + (1..4).map(|k| c[2 * k - 1] * (k as f64 * t).cos() + c[2 * k] * (k as f64 * t).sin()).sum::<f64>()
}

fn bump(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let d0 = rng.gen_range(0.0..0.1);
    let d: Vec<(f64, f64)> = (0..3).map(|_| (rng.gen_range(0.0..0.05), rng.gen_range(0.0..TAU))).collect();
    move |t| d0 + d.iter().enumerate().map(|(k, &(a, p))| a * (1.0 + ((k + 1) as f64 * t + p).cos())).sum::<f64>()
}

fn comparison_runs() -> ComparisonTally {
    let grid = AnnulusGrid::annulus(1.0, 2.0, 64, 64).unwrap();
    let r_ball = 2.0f64;
    let factor = r_ball.exp().powi(2);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut tally = ComparisonTally {
        violations: 0,
        worst_margin: f64::INFINITY,
        bound_failures: 0,
        instances: 0,
        ratio_range: (f64::INFINITY, 0.0),
    };
    for law in [FluxLaw::Linear, FluxLaw::PLaplace { p: 3.0 }, FluxLaw::MinimalSurface] {
        for _ in 0..20 {
            let (ui, uo, gi, go) = (trig(&mut rng), trig(&mut rng), bump(&mut rng), bump(&mut rng));
            let c = 1.0;
            let u = fd_solve(&grid, law, c, &ring_data(&grid, &ui, &uo), &SolverParams::default()).unwrap();
            let v = fd_solve(
                &grid,
                law,
                c,
                &ring_data(&grid, |t| ui(t) + gi(t), |t| uo(t) + go(t)),
                &SolverParams::default(),
            )
            .unwrap();
            let cmp = comparison_check(&u.field, &v.field, &grid, 1e-8).unwrap();
            tally.worst_margin = tally.worst_margin.min(cmp.min_margin);
            if cmp.min_margin < -1e-8 {
                tally.violations += 1;
            }
            for field in [&u.field, &v.field] {
                let g = gradient_bound_check(field, &grid, r_ball).unwrap();
                tally.instances += 1;
                if g.g_int > factor * g.g_bd + 10.0 * grid.h().powi(2) {
                    tally.bound_failures += 1;
                }
                tally.ratio_range.0 = tally.ratio_range.0.min(g.single_factor_ratio);
                tally.ratio_range.1 = tally.ratio_range.1.max(g.single_factor_ratio);
            }
        }
    }
    tally
}

fn left_invariance() -> Outcome {
    let nr = 128;
    let grid = AnnulusGrid::annulus(1.0, 2.0, nr, (TAU * nr as f64).round() as usize).unwrap();
    let v = counterexample(2, 1.0).unwrap();
    let harmonic = DiscreteField::from_fn(&grid, |r, t| v.value(r, t));
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let d = rng.gen_range(0.05..0.2);
        let z = GElem::from_point(&polar_chart(d, rng.gen_range(0.0..TAU)).unwrap());
        let rep = left_translate_check(&harmonic, &grid, FluxLaw::Linear, 0.0, &z, None).unwrap();
        worst = worst.max(rep.translated);
    }
    let law = FluxLaw::PLaplace { p: 3.0 };
    let exact = radial_solve(law, 2, 1.0, 1.0, 2.0, 0.0, 1.0).unwrap();
    let ring_values: Vec<f64> = (0..grid.rings()).map(|i| exact.value(grid.r(i)).unwrap()).collect();
    let radial = DiscreteField::from_fn(&grid, |r, _| ring_values[grid.ring_coordinate(r).round() as usize]);
    let mut ratio: f64 = 0.0;
    for s in [0.9, 1.1] {
        let rep = left_translate_check(&radial, &grid, law, 1.0, &GElem::planar(0.0, s), None).unwrap();
        ratio = ratio.max(rep.translated / rep.baseline);
    }
    Outcome::new(
        worst <= 1e-5 && ratio <= 10.0,
        format!("harmonic translated residual {worst:.2e} (1e-5, h = 1/128); p=3 radial translated/baseline {ratio:.3} (10)"),
    )
}

fn decay_classification() -> Outcome {
    let c = 1.0;
    let v = counterexample(2, c).unwrap();
    let radial = radial_solve(FluxLaw::Linear, 2, 0.0, 1.0, 12.0, 0.0, 1.0).unwrap();
    let l = |x: f64| (0.5 * x).tanh().ln();
    let two_a = 2.0 / (l(12.0) - l(1.0));
    let family = [
        DecayMember::new("constant", |_| 0.0),
        DecayMember::new("harmonic", |r| decay_indicator(&v, r, 4096).unwrap() * (-r).exp()),
        DecayMember::new("radial", |r| radial.gradient_norm(r)),
    ];
    let table = decay_scan(&family, &[4.0, 6.0, 8.0, 10.0, 12.0]);
    let (_, k0, _) = &table.classes[0];
    let (_, k1, last1) = &table.classes[1];
    let (_, k2, last2) = &table.classes[2];
    let pass = *k0 == DecayClass::ToZero
        && *k1 == DecayClass::ToPositive
        && rel_diff(*last1, c) <= 0.05
        && *k2 == DecayClass::ToPositive
        && rel_diff(*last2, two_a) <= 0.01
        && classify_decay(&[1.0, 2.0, 4.0, 8.0]) == DecayClass::Other;
    Outcome::new(
        pass,
        format!(
            "constant {k0}; harmonic {k1} plateau {last1:.6} (C = {c}, 5%); radial {k2} limit {last2:.8} vs 2|A| = {two_a:.8} (1%)"
        ),
    )
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_hyperlie-verify");
    let dir = tempfile::tempdir().unwrap();
    let mut csvs = Vec::new();
    for run in ["a", "b"] {
        let out = dir.path().join(run);
        let status = Command::new(exe)
            .args(["all", "--seed", "42", "--out"])
            .arg(&out)
            .output()
            .unwrap();
        let mut files: Vec<_> = std::fs::read_dir(&out)
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|x| x == "csv"))
            .collect();
        files.sort();
        let contents: Vec<(String, Vec<u8>)> = files
            .iter()
            .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(p).unwrap()))
            .collect();
        csvs.push((status.status.code(), contents));
    }
    let same = csvs[0].1 == csvs[1].1;
    Outcome::new(
        same && csvs[0].1.len() == 7,
        format!("{} CSV files, byte-identical: {same}, exit codes {:?} / {:?}", csvs[0].1.len(), csvs[0].0, csvs[1].0),
    )
}

// ------------------------------------------------------------------ runner

fn main() -> ExitCode {
    let mut failed = Vec::new();
    let mut report = |id: usize, name: &str, limit: Option<Duration>, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|l| took <= l);
        let pass = outcome.pass && in_time;
        let limit_text = limit.map(|l| format!(" / {}s", l.as_secs())).unwrap_or_default();
        println!(
            "criterion {id:>2} {name:<34} {}  {:.2}s{limit_text}  {}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            outcome.detail
        );
        if !pass {
            failed.push(id);
        }
    };
    let secs = |s: u64| Some(Duration::from_secs(s));

    report(1, "adjoint ball maximum", secs(5), &mut adjoint_ball_maximum);
    report(2, "right-translation norms", secs(2), &mut right_translation_norms);
    report(3, "group laws and isometries", secs(2), &mut group_and_isometry);
    report(4, "adjoint norm strong maximum", secs(10), &mut adjoint_strong_maximum);
    report(5, "bounded harmonic function", secs(5), &mut harmonic_counterexample);
    report(6, "radial flux law", secs(2), &mut radial_flux_law);
    report(7, "finite-volume convergence", secs(60), &mut solver_consistency);

    let start = Instant::now();
    let tally = comparison_runs();
    let took = start.elapsed();
    let within = took <= Duration::from_secs(120);
    report(8, "comparison of ordered data", None, &mut || {
        Outcome::new(
            tally.violations == 0 && within,
            format!(
                "{} violations below -1e-8 in 60 pairs, worst margin {:.2e}; {:.2}s / 120s with (9)",
                tally.violations,
                tally.worst_margin,
                took.as_secs_f64()
            ),
        )
    });
    report(9, "interior gradient bound", None, &mut || {
        Outcome::new(
            tally.bound_failures == 0 && within,
            format!(
                "{} of {} solved fields exceed e^(2R)·G_bd + 10h²; single-factor ratio in [{:.4}, {:.4}]",
                tally.bound_failures, tally.instances, tally.ratio_range.0, tally.ratio_range.1
            ),
        )
    });
    report(10, "left-translation invariance", secs(30), &mut left_invariance);
    report(11, "gradient decay classification", secs(5), &mut decay_classification);
    report(12, "deterministic campaign output", None, &mut determinism);

    if failed.is_empty() {
        println!("\nall 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("\nfailed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
