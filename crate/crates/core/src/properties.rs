//! Randomised invariants across modules.

use crate::elliptic::{radial_solve, FluxLaw};
use crate::group::GElem;
use crate::halfspace::{distance, geodesic_through, polar_chart, polar_chart_inv, sphere_param_planar, HPoint};
use crate::polar::{counterexample, gradient_norm, laplace_beltrami, polar_pushforward, PolarPoint, ScalarField2};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = HPoint> {
    (-4.0..4.0f64, -2.0..2.0f64).prop_map(|(x, ls)| HPoint::planar(x, ls.exp()))
}

fn point3() -> impl Strategy<Value = HPoint> {
    (-4.0..4.0f64, -4.0..4.0f64, -2.0..2.0f64).prop_map(|(x, y, ls)| HPoint::new(vec![x, y], ls.exp()).unwrap())
}

fn elem() -> impl Strategy<Value = GElem> {
    (-3.0..3.0f64, -2.0..2.0f64).prop_map(|(t, ls)| GElem::planar(t, ls.exp()))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn distance_is_a_metric(p in point(), q in point(), w in point()) {
        prop_assert!(close(distance(&p, &q), distance(&q, &p), 1e-12));
        prop_assert!(distance(&p, &w) <= distance(&p, &q) + distance(&q, &w) + 1e-12);
        prop_assert_eq!(distance(&p, &p), 0.0);
    }

    #[test]
    fn left_translation_is_an_isometry(g in elem(), p in point(), q in point()) {
        prop_assert!(close(distance(&g.act(&p), &g.act(&q)), distance(&p, &q), 1e-10));
    }

    #[test]
    fn translations_are_isometries_in_three_dimensions(t in prop::array::uniform2(-2.0..2.0f64), ls in -1.5..1.5f64,
                                                         p in point3(), q in point3()) {
        let g = GElem::new(t.to_vec(), ls.exp()).unwrap();
        prop_assert!(close(distance(&g.act(&p), &g.act(&q)), distance(&p, &q), 1e-10));
    }

    #[test]
    fn group_axioms(g in elem(), h in elem(), k in elem()) {
        let lhs = g.mul(&h).mul(&k);
        let rhs = g.mul(&h.mul(&k));
        prop_assert!(close(lhs.translation()[0], rhs.translation()[0], 1e-12));
        prop_assert!(close(lhs.scale(), rhs.scale(), 1e-12));
        let e = g.mul(&g.inv());
        prop_assert!(e.translation()[0].abs() < 1e-12 && (e.scale() - 1.0).abs() < 1e-12);
        let c = g.conj(&h);
        let via = g.mul(&h).mul(&g.inv());
        prop_assert!(close(c.translation()[0], via.translation()[0], 1e-12));
    }

    #[test]
    fn adjoint_norm_is_bounded_by_the_ball_maximum(g in elem()) {
        let d = distance(&HPoint::origin(2), &g.to_point());
        prop_assert!(g.ad_norm() >= 1.0 - 1e-12);
        prop_assert!(g.ad_norm() <= d.exp() * (1.0 + 1e-12));
        prop_assert!(close(g.right_diff_norm(&GElem::identity(2)), g.inv().ad_norm(), 1e-12));
    }

    #[test]
    fn polar_chart_round_trip(r in 0.01..8.0f64, theta in 0.0..6.28f64) {
        let p = polar_chart(r, theta).unwrap();
        prop_assert!(close(distance(&HPoint::origin(2), &p), r, 1e-10));
        let (rr, tt) = polar_chart_inv(&p).unwrap();
        prop_assert!(close(rr, r, 1e-10));
        prop_assert!((tt - theta).abs() < 1e-9 || (tt - theta).abs() > 6.28);
        let q = sphere_param_planar(r, theta).unwrap();
        prop_assert!(close(distance(&HPoint::origin(2), &q), r, 1e-10));
    }

    #[test]
    fn counterexample_is_harmonic(n in 2usize..6, r in 0.1..12.0f64, theta in 0.05..3.09f64) {
        let v = counterexample(n, 1.0).unwrap();
        prop_assert!(laplace_beltrami(&v, n, PolarPoint::new(r, theta).unwrap()).unwrap().abs() <= 1e-9);
        prop_assert!(v.value(r, theta).abs() <= 0.5 * (1.0 + 1e-9));
    }

    #[test]
    fn gradient_is_the_steepest_difference_quotient(r in 0.3..4.0f64, theta in 0.0..6.28f64) {
        let v = counterexample(2, 1.0).unwrap();
        let part = v.partials(r, theta);
        let g = gradient_norm(&v, PolarPoint::new(r, theta).unwrap()).unwrap();
        let dir = polar_pushforward(r, theta, part.dr, part.dtheta / r.sinh().powi(2)).unwrap();
        let p = dir.base().clone();
        let gamma = geodesic_through(&p, &dir).unwrap();
        let t = 1e-5;
        let q = gamma.eval(t);
        let (rq, tq) = polar_chart_inv(&q).unwrap();
        let quotient = (v.value(rq, tq) - v.value(r, theta)).abs() / distance(&p, &q);
        prop_assert!((quotient - g).abs() <= 1e-4, "{} vs {}", quotient, g);
    }

    #[test]
    fn flux_law_inverse(s in 0.0..50.0f64, p in 1.2..4.0f64) {
        for law in [FluxLaw::Linear, FluxLaw::PLaplace { p }, FluxLaw::MinimalSurface] {
            let y = law.a(s);
            if y < law.sup_a() {
                let back = law.a_inv(y).unwrap();
                prop_assert!(close(back, s, 1e-8), "{:?}: {} vs {}", law, back, s);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn radial_flux_is_conserved(jump in -0.5..0.5f64, c in -0.3..0.3f64, p in 1.3..3.5f64, n in 2usize..4) {
        for law in [FluxLaw::Linear, FluxLaw::PLaplace { p }, FluxLaw::MinimalSurface] {
            let sol = radial_solve(law, n, c, 1.0, 2.0, 0.0, jump).unwrap();
            let f0 = sol.flux_invariant(1.0).unwrap();
            for k in 1..=20 {
                let r = 1.0 + k as f64 / 20.0;
                prop_assert!((sol.flux_invariant(r).unwrap() - f0).abs() <= 1e-10);
            }
            prop_assert!((sol.value(2.0).unwrap() - jump).abs() <= 1e-10);
        }
    }
}
