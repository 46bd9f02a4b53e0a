use super::config::CampaignConfig;
use super::report::{Row, VerificationReport};
use crate::elliptic::{
    comparison_check, decay_scan, fd_solve, gradient_bound_check, left_translate_check, radial_solve, radial_solve_disk,
    translation_estimate_check, AnnulusGrid, DecayClass, DecayMember, DiscreteField, FluxLaw, RadialSolution,
    SolverParams,
};
use crate::error::SolveError;
use crate::group::{ad_norm_ball_max_numeric, BallSamples, GElem};
use crate::halfspace::{polar_chart, HPoint};
use crate::polar::{counterexample, decay_indicator, gradient_norm, laplace_beltrami, ConstantField, PolarPoint, ScalarField2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};
use std::time::Instant;

/// The named verification campaigns, in the order `all` runs them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Campaign {
    AdjointMax,
    Harmonic,
    Radial,
    Solve2d,
    Compare,
    TranslateCheck,
    DecayScan,
}

impl Campaign {
    pub const ALL: [Campaign; 7] = [
        Campaign::AdjointMax,
        Campaign::Harmonic,
        Campaign::Radial,
        Campaign::Solve2d,
        Campaign::Compare,
        Campaign::TranslateCheck,
        Campaign::DecayScan,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Campaign::AdjointMax => "adjoint-max",
            Campaign::Harmonic => "harmonic",
            Campaign::Radial => "radial",
            Campaign::Solve2d => "solve2d",
            Campaign::Compare => "compare",
            Campaign::TranslateCheck => "translate-check",
            Campaign::DecayScan => "decay-scan",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Runs the campaign and records its wall time.
    pub fn run(&self, cfg: &CampaignConfig) -> VerificationReport {
        let start = Instant::now();
        let mut report = match self {
            Campaign::AdjointMax => run_adjoint_max(cfg),
            Campaign::Harmonic => run_harmonic(cfg),
            Campaign::Radial => run_radial(cfg),
            Campaign::Solve2d => run_solve2d(cfg),
            Campaign::Compare => run_compare(cfg),
            Campaign::TranslateCheck => run_translate(cfg),
            Campaign::DecayScan => run_decay(cfg),
        };
        report.walltime_s = start.elapsed().as_secs_f64();
        report
    }
}

/// Runs every campaign in declaration order.
pub fn run_all(cfg: &CampaignConfig) -> Vec<VerificationReport> {
    Campaign::ALL.iter().map(|c| c.run(cfg)).collect()
}

/// Sampled `max_{B_R} ‖Ad‖` against `e^R`, its location, and the boundary margin.
pub fn run_adjoint_max(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("adjoint-max");
    let samples = BallSamples {
        shells: 100,
        per_shell: cfg.samples,
    };
    for r in cfg.radii_or(&[0.0, 0.5, 1.0, 2.0, 5.0]) {
        let found = match ad_norm_ball_max_numeric(r, samples) {
            Ok(found) => found,
            Err(e) => {
                rep.push(Row::error("ball_max", Some(r), e));
                continue;
            }
        };
        if r == 0.0 {
            rep.push(Row::abs("ball_max", Some(r), 1.0, found.value, 0.0));
            continue;
        }
        rep.push(Row::rel("ball_max", Some(r), r.exp(), found.value, cfg.tol_adjoint));
        let top = HPoint::planar(0.0, r.exp());
        rep.push(Row::at_most("argmax_offset", Some(r), found.argmax.euclidean_distance(&top), cfg.tol_argmax));
        rep.push(Row::at_least("boundary_margin", Some(r), found.boundary_margin(), 0.0, true));
    }
    rep
}

/// Sample radii and angles for operator scans; angles avoid the polar axis.
fn scan_points() -> impl Iterator<Item = (f64, f64)> {
    (0..200).flat_map(|i| {
        let r = 0.1 + 11.9 * i as f64 / 199.0;
        (0..64).map(move |j| (r, PI * (j as f64 + 0.5) / 64.0))
    })
}

/// The bounded harmonic function with non-vanishing gradient decay.
pub fn run_harmonic(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("harmonic");
    let (n, c) = (cfg.n, cfg.c);
    let v = match counterexample(n, c) {
        Ok(v) if c > 0.0 => v,
        Ok(_) => {
            rep.push(Row::error("setup", None, "the harmonic campaign needs C > 0"));
            return rep;
        }
        Err(e) => {
            rep.push(Row::error("setup", None, e));
            return rep;
        }
    };

    let mut lap: f64 = 0.0;
    let mut sup_v: f64 = 0.0;
    let mut identity: f64 = 0.0;
    for (r, t) in scan_points() {
        let p = PolarPoint { r, theta: t };
        match laplace_beltrami(&v, n, p) {
            Ok(x) => lap = lap.max(x.abs()),
            Err(_) => lap = f64::INFINITY,
        }
        sup_v = sup_v.max(v.value(r, t).abs());
        if n == 2 {
            let g = gradient_norm(&v, p).unwrap_or(f64::NAN);
            identity = identity.max((g * 2.0 * (1.0 + r.cosh()) / c - 1.0).abs());
        }
    }
    rep.push(Row::at_most("laplacian_max", None, lap, cfg.tol_harmonic));
    let konst = laplace_beltrami(&ConstantField(3.0), n, PolarPoint { r: 1.0, theta: 1.0 }).unwrap_or(f64::NAN);
    rep.push(Row::abs("laplacian_const", None, 0.0, konst, 0.0));
    rep.push(Row::at_most("bounded", None, sup_v, 0.5 * c * (1.0 + 1e-9)));
    if n == 2 {
        rep.push(Row::at_most("gradient_identity", None, identity, cfg.tol_gradient));
        rep.push(Row::at_least("nonconstant", Some(5.0), v.value(5.0, 0.0) - v.value(5.0, PI), 0.9 * c, false));
    }

    let radii = cfg.radii_or(&[2.0, 4.0, 6.0, 8.0, 10.0]);
    let samples = 4096;
    let mut gaps = Vec::new();
    for &r in &radii {
        let ind = match decay_indicator(&v, r, samples) {
            Ok(x) => x,
            Err(e) => {
                rep.push(Row::error("decay_indicator", Some(r), e));
                continue;
            }
        };
        gaps.push((ind - c).abs());
        if n == 2 {
            let expected = c * r.exp() / (2.0 + r.exp() + (-r).exp());
            rep.push(Row::abs("decay_indicator", Some(r), expected, ind, cfg.tol_indicator));
            if r >= 2.0 {
                rep.push(Row::at_most("indicator_gap", Some(r), (ind - c).abs(), 4.0 * c * (-r).exp()));
            }
        } else if Some(&r) == radii.last() {
            rep.push(Row::rel("decay_indicator", Some(r), c, ind, 1e-2));
        }
        let konst = decay_indicator(&ConstantField(1.0), r, samples).unwrap_or(f64::NAN);
        rep.push(Row::abs("decay_indicator_const", Some(r), 0.0, konst, 0.0));
    }
    rep.push(Row::flag("indicator_gap_decreasing", None, gaps.windows(2).all(|w| w[1] < w[0])));
    rep
}

/// `ln tanh(r/2)` normalised to `0` at `r = 1` and `1` at `r = 2`.
fn log_tanh_profile(r: f64) -> f64 {
    let l = |x: f64| (0.5 * x).tanh().ln();
    (l(r) - l(1.0)) / (l(2.0) - l(1.0))
}

/// Radial solutions: flux conservation, closed forms, non-existence and rigidity.
pub fn run_radial(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("radial");
    let laws = [
        FluxLaw::Linear,
        FluxLaw::PLaplace { p: 1.5 },
        FluxLaw::PLaplace { p: 3.0 },
        FluxLaw::MinimalSurface,
    ];
    for law in laws {
        for c in [0.0, 0.1] {
            let id = format!("flux_drift/{}/C={c}", law.name());
            let sol = match radial_solve(law, cfg.n, c, 1.0, 2.0, 0.0, 0.3) {
                Ok(sol) => sol,
                Err(e) => {
                    rep.push(Row::error(&id, None, e));
                    continue;
                }
            };
            match flux_drift(&sol) {
                Ok(d) => rep.push(Row::at_most(&id, None, d, cfg.tol_flux)),
                Err(e) => rep.push(Row::error(&id, None, e)),
            }
            let end = sol.value(2.0).unwrap_or(f64::NAN);
            rep.push(Row::abs(&format!("boundary_match/{}/C={c}", law.name()), Some(2.0), 0.3, end, 1e-10));
        }
    }

    match radial_solve(FluxLaw::Linear, 2, 0.0, 1.0, 2.0, 0.0, 1.0) {
        Ok(sol) => {
            let l = |x: f64| (0.5 * x).tanh().ln();
            rep.push(Row::rel("linear_flux_constant", None, 1.0 / (l(2.0) - l(1.0)), sol.flux_constant(), 1e-10));
            let mut err: f64 = 0.0;
            for k in 0..=100 {
                let r = 1.0 + k as f64 / 100.0;
                err = err.max((sol.value(r).unwrap_or(f64::NAN) - log_tanh_profile(r)).abs());
            }
            rep.push(Row::at_most("linear_closed_form", None, err, 1e-10));
        }
        Err(e) => rep.push(Row::error("linear_closed_form", None, e)),
    }

    match radial_solve(FluxLaw::MinimalSurface, 2, 0.0, 0.05, 2.0, 0.0, 50.0) {
        Err(SolveError::NoSolution { radius }) => {
            rep.push(Row::flag("mse_nonexistence", Some(radius), true));
        }
        other => rep.push(Row::flag("mse_nonexistence", None, false).with_note(format!("{other:?}"))),
    }

    for law in laws {
        let id = format!("disk_rigidity/{}", law.name());
        match radial_solve_disk(law, cfg.n, 0.0, 2.0, 0.7) {
            Ok(sol) => rep.push(Row::abs(&id, Some(2.0), 0.0, sol.flux_constant(), 1e-10)),
            Err(e) => rep.push(Row::error(&id, Some(2.0), e)),
        }
    }
    rep
}

/// Largest deviation of the flux invariant from its value at the inner radius.
pub fn flux_drift(sol: &RadialSolution) -> Result<f64, SolveError> {
    let (a, b) = sol.radii();
    let f0 = sol.flux_invariant(a)?;
    let mut drift: f64 = 0.0;
    for k in 1..=200 {
        let r = a + (b - a) * k as f64 / 200.0;
        drift = drift.max((sol.flux_invariant(r)? - f0).abs());
    }
    Ok(drift)
}

/// Field equal to `inner(θ)` on the inner ring and `outer(θ)` elsewhere; only
/// the boundary rings matter to the solver.
pub fn ring_data(grid: &AnnulusGrid, inner: impl Fn(f64) -> f64, outer: impl Fn(f64) -> f64) -> DiscreteField {
    let mut f = DiscreteField::zeros(grid);
    for j in 0..grid.ntheta() {
        let t = grid.theta(j);
        for i in 0..grid.rings() {
            f.set(i, j, if i == 0 { inner(t) } else { outer(t) });
        }
    }
    f
}

/// Max nodal error of a symmetric solve against the radial solution.
fn symmetric_error(
    nr: usize,
    ntheta: usize,
    law: FluxLaw,
    c: f64,
    exact: &RadialSolution,
    tol: f64,
) -> Result<(f64, f64), SolveError> {
    let grid = AnnulusGrid::annulus(1.0, 2.0, nr, ntheta)?;
    let (lo, hi) = exact.boundary_values();
    let data = ring_data(&grid, |_| lo, |_| hi);
    let params = SolverParams {
        tol,
        ..SolverParams::default()
    };
    let sol = fd_solve(&grid, law, c, &data, &params)?;
    let mut err: f64 = 0.0;
    for i in 0..grid.rings() {
        let want = exact.value(grid.r(i))?;
        for &v in sol.field.ring(i) {
            err = err.max((v - want).abs());
        }
    }
    Ok((err, sol.residual))
}

/// Two-grid convergence against the radial solution, plus solver sanity rows.
///
/// The symmetric data `0 → 1` on `[1, 2]` keeps `u′` away from zero for the
/// default law; at an interior critical point the degenerate p-Laplace
/// solution loses smoothness and the observed order drops below 2.
pub fn run_solve2d(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("solve2d");
    let (law, c) = match cfg.flux_law() {
        Ok(law) => (law, cfg.c),
        Err(e) => {
            rep.push(Row::error("setup", None, e));
            return rep;
        }
    };
    let (nr, nt) = (cfg.grid_nr, cfg.grid_ntheta);
    let order = radial_solve(law, 2, c, 1.0, 2.0, 0.0, 1.0).and_then(|exact| {
        let coarse = symmetric_error(nr, nt, law, c, &exact, cfg.tol_solver)?;
        let fine = symmetric_error(2 * nr, 2 * nt, law, c, &exact, cfg.tol_solver)?;
        Ok((coarse, fine))
    });
    match order {
        Ok(((e1, res1), (e2, res2))) => {
            rep.push(Row::abs("convergence_order", None, 2.0, (e1 / e2).log2(), cfg.tol_order));
            rep.push(Row::at_most("residual_coarse", None, res1, cfg.tol_solver));
            rep.push(Row::at_most("residual_fine", None, res2, cfg.tol_solver));
        }
        Err(e) => rep.push(Row::error("convergence_order", None, e)),
    }

    let constant = AnnulusGrid::annulus(1.0, 2.0, nr, nt).and_then(|grid| {
        let data = ring_data(&grid, |_| 0.7, |_| 0.7);
        let sol = fd_solve(&grid, law, 0.0, &data, &SolverParams::default())?;
        Ok(sol.field.values().iter().fold(0.0f64, |m, v| m.max((v - 0.7).abs())))
    });
    match constant {
        Ok(dev) => rep.push(Row::at_most("constant_data", None, dev, 1e-10)),
        Err(e) => rep.push(Row::error("constant_data", None, e)),
    }

    let principle = AnnulusGrid::annulus(1.0, 2.0, nr, nt).and_then(|grid| {
        let data = ring_data(&grid, f64::cos, f64::cos);
        let sol = fd_solve(&grid, FluxLaw::Linear, 0.0, &data, &SolverParams::default())?;
        let (lo, hi) = boundary_range(&sol.field, &grid);
        let mut margin = f64::INFINITY;
        for i in grid.first_interior()..grid.nr() {
            for &v in sol.field.ring(i) {
                margin = margin.min(v - lo).min(hi - v);
            }
        }
        Ok(margin)
    });
    match principle {
        Ok(m) => rep.push(Row::at_least("max_principle_margin", None, m, 0.0, false)),
        Err(e) => rep.push(Row::error("max_principle_margin", None, e)),
    }

    let disk = AnnulusGrid::disk(2.0, nr, nt).and_then(|grid| {
        let data = ring_data(&grid, |_| -1.5, |_| -1.5);
        let sol = fd_solve(&grid, law, 0.0, &data, &SolverParams::default())?;
        Ok(sol.field.values().iter().fold(0.0f64, |m, v| m.max((v + 1.5).abs())))
    });
    match disk {
        Ok(dev) => rep.push(Row::at_most("disk_constant", Some(2.0), dev, 1e-10)),
        Err(e) => rep.push(Row::error("disk_constant", Some(2.0), e)),
    }
    rep
}

fn boundary_range(u: &DiscreteField, grid: &AnnulusGrid) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in grid.boundary_rings() {
        for &v in u.ring(i) {
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    (lo, hi)
}

/// A random low-mode trigonometric polynomial `θ ↦ a₀ + Σ aₖ cos kθ + bₖ sin kθ`.
fn random_trig(rng: &mut ChaCha8Rng, amplitude: f64) -> impl Fn(f64) -> f64 {
    let coef: Vec<(f64, f64)> = (0..4)
        .map(|_| (rng.gen_range(-amplitude..amplitude), rng.gen_range(-amplitude..amplitude)))
        .collect();
    move |t| {
        coef.iter()
            .enumerate()
            .map(|(k, &(a, b))| if k == 0 { a } else { a * (k as f64 * t).cos() + b * (k as f64 * t).sin() })
            .sum()
    }
}

/// A random non-negative bump `θ ↦ d₀ + Σ dₖ(1 + cos(kθ + φₖ))`.
fn random_gap(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let d0 = rng.gen_range(0.0..0.1);
    let modes: Vec<(f64, f64)> = (1..4).map(|_| (rng.gen_range(0.0..0.05), rng.gen_range(0.0..TAU))).collect();
    move |t| {
        d0 + modes
            .iter()
            .enumerate()
            .map(|(k, &(d, phi))| d * (1.0 + ((k + 1) as f64 * t + phi).cos()))
            .sum::<f64>()
    }
}

/// Comparison principle on seeded ordered pairs, with the gradient and
/// translation estimates evaluated on every solved instance.
pub fn run_compare(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("compare");
    let grid = match AnnulusGrid::annulus(1.0, 2.0, cfg.grid_nr, cfg.grid_ntheta) {
        Ok(g) => g,
        Err(e) => {
            rep.push(Row::error("setup", None, e));
            return rep;
        }
    };
    let r_ball = grid.r_outer();
    let c = cfg.c;
    let params = SolverParams {
        tol: cfg.tol_solver,
        ..SolverParams::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    for law in [FluxLaw::Linear, FluxLaw::PLaplace { p: 3.0 }, FluxLaw::MinimalSurface] {
        let name = law.name();
        for k in 0..cfg.instances {
            let (ui, uo) = (random_trig(&mut rng, 0.2), random_trig(&mut rng, 0.2));
            let (gi, go) = (random_gap(&mut rng), random_gap(&mut rng));
            let u_data = ring_data(&grid, &ui, &uo);
            let v_data = ring_data(&grid, |t| ui(t) + gi(t), |t| uo(t) + go(t));
            let id = |what: &str| format!("{what}/{name}/{k:02}");
            let solved = fd_solve(&grid, law, c, &u_data, &params)
                .and_then(|u| Ok((u.field, fd_solve(&grid, law, c, &v_data, &params)?.field)));
            let (u, v) = match solved {
                Ok(pair) => pair,
                Err(e) => {
                    rep.push(Row::error(&id("comparison_margin"), None, e));
                    continue;
                }
            };
            match comparison_check(&u, &v, &grid, cfg.tol_compare) {
                Ok(m) => rep.push(Row::at_least(&id("comparison_margin"), None, m.min_margin, -cfg.tol_compare, false)),
                Err(e) => rep.push(Row::error(&id("comparison_margin"), None, e)),
            }
            for (tag, field) in [("u", &u), ("v", &v)] {
                let gid = id(&format!("gradient_bound_{tag}"));
                match gradient_bound_check(field, &grid, r_ball) {
                    Ok(g) => {
                        rep.push(Row::at_most(&gid, Some(r_ball), g.g_int, g.factor * g.g_bd + g.allowance));
                        rep.push(Row::info(&id(&format!("single_factor_ratio_{tag}")), Some(r_ball), g.single_factor_ratio));
                    }
                    Err(e) => rep.push(Row::error(&gid, Some(r_ball), e)),
                }
            }
            if k == 0 {
                match translation_estimate_check(&u, &grid, 200, cfg.seed) {
                    Ok(t) => rep.push(Row::at_most(&id("translation_estimate"), None, t.worst_ratio, 1.0)),
                    Err(e) => rep.push(Row::error(&id("translation_estimate"), None, e)),
                }
            }
        }
    }

    let identical = fd_solve(&grid, FluxLaw::Linear, c, &ring_data(&grid, f64::sin, f64::cos), &params)
        .and_then(|u| comparison_check(&u.field, &u.field, &grid, cfg.tol_compare));
    match identical {
        Ok(m) => rep.push(Row::abs("identical_data", None, 0.0, m.min_margin, 0.0)),
        Err(e) => rep.push(Row::error("identical_data", None, e)),
    }
    let shifted = fd_solve(&grid, FluxLaw::Linear, c, &ring_data(&grid, f64::sin, f64::cos), &params).and_then(|u| {
        let v = fd_solve(&grid, FluxLaw::Linear, c, &ring_data(&grid, |t| t.sin() + 0.1, |t| t.cos() + 0.1), &params)?;
        comparison_check(&u.field, &v.field, &grid, cfg.tol_compare)
    });
    match shifted {
        Ok(m) => rep.push(Row::at_least("linear_shift", None, m.min_margin, 0.1 - 1e-8, false)),
        Err(e) => rep.push(Row::error("linear_shift", None, e)),
    }
    rep
}

/// Annulus `[1, 2]` with `h_r = h_θ = 1/(2·grid.nr)`.
fn isotropic_grid(cfg: &CampaignConfig) -> Result<AnnulusGrid, SolveError> {
    let nr = 2 * cfg.grid_nr;
    AnnulusGrid::annulus(1.0, 2.0, nr, (TAU * nr as f64).round() as usize)
}

/// Samples a radial solution ring by ring.
pub fn sample_radial(grid: &AnnulusGrid, sol: &RadialSolution) -> Result<DiscreteField, SolveError> {
    let mut f = DiscreteField::zeros(grid);
    for i in 0..grid.rings() {
        let v = sol.value(grid.r(i))?;
        for j in 0..grid.ntheta() {
            f.set(i, j, v);
        }
    }
    Ok(f)
}

/// A left translation by at most `max_dist` from the identity.
pub fn random_translation(rng: &mut ChaCha8Rng, max_dist: f64) -> GElem {
    let r = rng.gen_range(0.25 * max_dist..max_dist);
    let t = rng.gen_range(0.0..TAU);
    GElem::from_point(&polar_chart(r, t).expect("radius is positive"))
}

/// Residuals of left-translated solutions.
pub fn run_translate(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("translate-check");
    let grid = match isotropic_grid(cfg) {
        Ok(g) => g,
        Err(e) => {
            rep.push(Row::error("setup", None, e));
            return rep;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let v = counterexample(2, 1.0).expect("n = 2 is valid");
    let harmonic = DiscreteField::from_fn(&grid, |r, t| v.value(r, t));
    match left_translate_check(&harmonic, &grid, FluxLaw::Linear, 0.0, &GElem::identity(2), None) {
        Ok(t) => rep.push(Row::abs("identity_translate", None, t.baseline, t.translated, 0.0)),
        Err(e) => rep.push(Row::error("identity_translate", None, e)),
    }
    for k in 0..5 {
        let z = random_translation(&mut rng, 0.2);
        let id = format!("harmonic_translate/{k}");
        match left_translate_check(&harmonic, &grid, FluxLaw::Linear, 0.0, &z, None) {
            Ok(t) => rep.push(Row::at_most(&id, None, t.translated, cfg.tol_translate)),
            Err(e) => rep.push(Row::error(&id, None, e)),
        }
    }

    let law = match cfg.flux_law() {
        Ok(FluxLaw::Linear) | Err(_) => FluxLaw::PLaplace { p: 3.0 },
        Ok(law) => law,
    };
    let radial = radial_solve(law, 2, cfg.c, 1.0, 2.0, 0.0, 1.0).and_then(|s| sample_radial(&grid, &s));
    let u = match radial {
        Ok(u) => u,
        Err(e) => {
            rep.push(Row::error("radial_translate", None, e));
            return rep;
        }
    };
    for s in [0.9, 1.1] {
        let z = GElem::planar(0.0, s);
        let id = format!("radial_translate/{}", law.name());
        match left_translate_check(&u, &grid, law, cfg.c, &z, None) {
            Ok(t) => rep.push(Row::at_most(&id, Some(s.ln().abs()), t.translated, 10.0 * t.baseline)),
            Err(e) => rep.push(Row::error(&id, Some(s.ln().abs()), e)),
        }
    }
    rep
}

/// Decay-indicator table and classes for the constant, harmonic and radial families.
pub fn run_decay(cfg: &CampaignConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("decay-scan");
    let radii = cfg.radii_or(&[4.0, 6.0, 8.0, 10.0, 12.0]);
    let last = *radii.last().expect("validated non-empty");
    let c = cfg.c;
    let v = match counterexample(cfg.n, c) {
        Ok(v) => v,
        Err(e) => {
            rep.push(Row::error("setup", None, e));
            return rep;
        }
    };
    let outer = last.max(2.0);
    let radial = match radial_solve(FluxLaw::Linear, 2, 0.0, 1.0, outer, 0.0, 1.0) {
        Ok(s) => s,
        Err(e) => {
            rep.push(Row::error("setup", None, e));
            return rep;
        }
    };
    let samples = cfg.samples;
    let family = [
        DecayMember::new("constant", |r| {
            decay_indicator(&ConstantField(2.0), r, samples).map_or(f64::NAN, |x| x * (-r).exp())
        }),
        DecayMember::new("harmonic", |r| decay_indicator(&v, r, samples).map_or(f64::NAN, |x| x * (-r).exp())),
        DecayMember::new("radial", |r| radial.gradient_norm(r)),
    ];
    let table = decay_scan(&family, &radii);
    for row in &table.rows {
        rep.push(Row::info(&format!("indicator/{}", row.label), Some(row.r), row.value));
    }
    let two_a = 2.0 * radial.flux_constant().abs();
    for (label, class, tail) in &table.classes {
        let (want, plateau) = match label.as_str() {
            "constant" => (DecayClass::ToZero, None),
            "harmonic" => (DecayClass::ToPositive, Some((c, cfg.tol_decay))),
            _ => (DecayClass::ToPositive, Some((two_a, 1e-2))),
        };
        rep.push(Row::flag(&format!("class/{label}"), None, *class == want).with_note(format!("class {class}, want {want}")));
        if let Some((expected, tol)) = plateau {
            rep.push(Row::rel(&format!("plateau/{label}"), Some(last), expected, *tail, tol));
        }
    }
    rep
}
