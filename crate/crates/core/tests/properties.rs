//! Invariants of the algebra and of every module built on it.

mod common;

use common::*;
use hypercx::analysis::{self, Path, TwoComplexFunction};
use hypercx::forms::{self, ExponentialForm};
use hypercx::functions::{self, reference};
use hypercx::polynomials::{self, ComponentRoot, TwoComplexPolynomial};
use hypercx::series::{self, PowerSeries};
use hypercx::{CanonicalPair, TwoComplex};
use proptest::collection::vec;
use proptest::prelude::*;

fn any_tc(r: f64) -> impl Strategy<Value = TwoComplex> {
    (-r..r, -r..r).prop_map(|(x, y)| tc(x, y))
}

/// Points with `v₊ = ρe^λ`, `v₋ = ρe^{−λ}`. Beyond `|λ| ≈ 18.7` the smaller
/// canonical coordinate is below the resolution of `x` and `y`; such draws
/// are not sector points and are redrawn.
fn sector_tc(max_lambda: f64) -> impl Strategy<Value = TwoComplex> {
    (-3.0f64..3.0, -max_lambda..max_lambda).prop_filter_map("not representable", |(lr, l)| {
        forms::from_exponential(ExponentialForm { rho: lr.exp(), lambda: l }).ok()
    })
}

fn disc_tc(r: f64) -> impl Strategy<Value = TwoComplex> {
    (0.0..r, 0.0..std::f64::consts::TAU).prop_map(|(m, a)| tc(m * a.cos(), m * a.sin()))
}

proptest! {
    // ---- algebra ----

    #[test]
    fn multiplication_is_commutative(a in any_tc(1e3), b in any_tc(1e3)) {
        prop_assert_eq!(a * b, b * a);
    }

    #[test]
    fn multiplication_is_associative(a in any_tc(1e3), b in any_tc(1e3), c in any_tc(1e3)) {
        let tol = ulps(4.0, mag(a) * mag(b) * mag(c));
        prop_assert!(dist((a * b) * c, a * (b * c)) <= tol);
    }

    #[test]
    fn multiplication_distributes(a in any_tc(1e3), b in any_tc(1e3), c in any_tc(1e3)) {
        let tol = ulps(4.0, mag(a) * (mag(b) + mag(c)));
        prop_assert!(dist(a * (b + c), a * b + a * c) <= tol);
    }

    #[test]
    fn canonical_coordinates_are_a_homomorphism(a in any_tc(1e3), b in any_tc(1e3)) {
        let lhs = (a * b).to_canonical();
        let rhs = a.to_canonical() * b.to_canonical();
        let tol = ulps(4.0, mag(a) * mag(b));
        prop_assert!((lhs.v_plus - rhs.v_plus).abs() <= tol);
        prop_assert!((lhs.v_minus - rhs.v_minus).abs() <= tol);
    }

    #[test]
    fn nu_is_multiplicative(a in any_tc(1e3), b in any_tc(1e3)) {
        // ν in canonical form is v₊v₋, so the check compares like with like
        let lhs = (a * b).nu();
        let rhs = a.nu() * b.nu();
        prop_assert!(rel(lhs, rhs) <= 1e-12 || (lhs - rhs).abs() <= ulps(8.0, (mag(a) * mag(b)).powi(2)));
    }

    #[test]
    fn amplitude_is_multiplicative_off_the_light_cone(
        a in sector_tc(3.0), b in sector_tc(3.0), sa in prop::bool::ANY, sb in prop::bool::ANY,
    ) {
        // ν > 0 means the sector or its negative
        let a = if sa { a } else { -a };
        let b = if sb { b } else { -b };
        let p = a * b;
        let lhs = p.amplitude().unwrap();
        let rhs = a.amplitude().unwrap() * b.amplitude().unwrap();
        // ν(ab) is recovered from rounded x, y: condition number d²/ν
        let kappa = p.modulus().powi(2) / p.nu();
        prop_assert!(rel(lhs, rhs) <= 1e-12 * kappa, "{lhs} vs {rhs}");
    }

    #[test]
    fn determinant_is_nu(u in any_tc(1e3)) {
        prop_assert!((u.to_matrix().det() - u.nu()).abs() <= ulps(4.0, mag(u).powi(2)));
    }

    #[test]
    fn zero_products_come_from_opposite_nodal_lines(
        a in -1e3f64..1e3, b in -1e3f64..1e3, s in prop::bool::ANY, t in prop::bool::ANY,
    ) {
        prop_assume!(a != 0.0 && b != 0.0);
        let sign = |f: bool| if f { 1.0 } else { -1.0 };
        let u = tc(a, sign(s) * a);
        let w = tc(b, sign(t) * b);
        prop_assert_eq!(u * w == TwoComplex::ZERO, s != t);
    }

    #[test]
    fn modulus_parallelogram_identity(u in any_tc(1e3)) {
        let (x, y) = (u.x(), u.y());
        let lhs = (x + y).powi(2) + (x - y).powi(2);
        prop_assert!((lhs - 2.0 * u.modulus().powi(2)).abs() <= ulps(4.0, mag(u).powi(2)));
    }

    #[test]
    fn matrices_multiply_like_numbers(a in any_tc(1e3), b in any_tc(1e3)) {
        let m = a.to_matrix().mul(&b.to_matrix());
        prop_assert!(m.is_twocomplex());
        prop_assert_eq!(m.to_twocomplex().unwrap(), a * b);
    }

    #[test]
    fn inverse_is_inverse(u in any_tc(1e3)) {
        prop_assume!(!u.is_near_zero_divisor(1e-3 * mag(u)));
        let p = u * u.inverse().unwrap();
        prop_assert!(dist(p, TwoComplex::ONE) <= 1e-9);
    }

    // ---- forms ----

    #[test]
    fn exponential_form_round_trip(u in sector_tc(20.0)) {
        let back = forms::from_exponential(forms::to_exponential(u).unwrap()).unwrap();
        prop_assert!(rel_tc(back, u) <= 1e-12, "{u} -> {back}");
    }

    #[test]
    fn exponential_form_inverse_round_trip(lr in -3.0f64..3.0, lambda in -3.0f64..3.0) {
        // the reverse direction recovers v₋ from x − y, which costs a factor
        // e^{2|λ|} in relative accuracy; |λ| ≤ 3 keeps that below 1e-12
        let f = ExponentialForm { rho: lr.exp(), lambda };
        let g = forms::to_exponential(forms::from_exponential(f).unwrap()).unwrap();
        prop_assert!(rel(g.rho, f.rho) <= 1e-12, "{f:?} -> {g:?}");
        prop_assert!((g.lambda - f.lambda).abs() <= 1e-12 * f.lambda.abs().max(1.0), "{f:?} -> {g:?}");
    }

    #[test]
    fn amplitude_argument_and_tan_rules(a in sector_tc(3.0), b in sector_tc(3.0)) {
        let (fa, fb) = (forms::to_exponential(a).unwrap(), forms::to_exponential(b).unwrap());
        let f = forms::to_exponential(a * b).unwrap();
        prop_assert!(rel(f.rho, fa.rho * fb.rho) <= 1e-10);
        let l = fa.lambda + fb.lambda;
        prop_assert!((f.lambda - l).abs() <= 1e-10 * l.abs().max(1.0));
        let tan = |u: TwoComplex| forms::theta_of(u).unwrap().tan();
        prop_assert!(rel(tan(a * b), tan(a) * tan(b)) <= 1e-10);
    }

    #[test]
    fn amplitude_from_trig_form(u in sector_tc(2.0)) {
        // sin 2θ = sech 2λ; for larger |λ| the rounding of θ itself
        // dominates the relative error of sin 2θ
        let t = forms::to_trigonometric(u).unwrap();
        let rho = forms::to_exponential(u).unwrap().rho;
        prop_assert!(rel(t.d * (2.0 * t.theta).sin().sqrt(), rho) <= 1e-12);
    }

    // ---- functions ----

    #[test]
    fn functions_act_componentwise(u in any_tc(2.0)) {
        let c = u.to_canonical();
        let check = |v: TwoComplex, f: fn(f64) -> f64| {
            let w = v.to_canonical();
            let (p, m) = (f(c.v_plus), f(c.v_minus));
            (w.v_plus - p).abs() <= 1e-12 * (1.0 + p.abs())
                && (w.v_minus - m).abs() <= 1e-12 * (1.0 + m.abs())
        };
        prop_assert!(check(functions::exp(u).unwrap(), f64::exp));
        prop_assert!(check(functions::cos(u), f64::cos));
        prop_assert!(check(functions::sin(u), f64::sin));
        prop_assert!(check(functions::cosh(u).unwrap(), f64::cosh));
        prop_assert!(check(functions::sinh(u).unwrap(), f64::sinh));
    }

    #[test]
    fn log_acts_componentwise(u in sector_tc(5.0)) {
        let c = u.to_canonical();
        let w = functions::log(u).unwrap().to_canonical();
        prop_assert!((w.v_plus - c.v_plus.ln()).abs() <= 1e-12 * (1.0 + c.v_plus.ln().abs()));
        prop_assert!((w.v_minus - c.v_minus.ln()).abs() <= 1e-12 * (1.0 + c.v_minus.ln().abs()));
    }

    #[test]
    fn exp_turns_sums_into_products(a in any_tc(3.0), b in any_tc(3.0)) {
        let lhs = functions::exp(a + b).unwrap();
        let rhs = functions::exp(a).unwrap() * functions::exp(b).unwrap();
        prop_assert!(rel_tc(lhs, rhs) <= 1e-12);
    }

    #[test]
    fn log_turns_products_into_sums(a in sector_tc(3.0), b in sector_tc(3.0)) {
        let lhs = functions::log(a * b).unwrap();
        let rhs = functions::log(a).unwrap() + functions::log(b).unwrap();
        prop_assert!(dist(lhs, rhs) <= 1e-11);
    }

    #[test]
    fn addition_theorems_against_series(a in disc_tc(1.0), b in disc_tc(1.0)) {
        let n = 30;
        let s = a + b;
        let (ca, sa, cb, sb) = (functions::cos(a), functions::sin(a), functions::cos(b), functions::sin(b));
        prop_assert!(dist(ca * cb - sa * sb, reference::cos_series(s, n)) <= 1e-12);
        prop_assert!(dist(sa * cb + ca * sb, reference::sin_series(s, n)) <= 1e-12);
        let (cha, sha) = (functions::cosh(a).unwrap(), functions::sinh(a).unwrap());
        let (chb, shb) = (functions::cosh(b).unwrap(), functions::sinh(b).unwrap());
        prop_assert!(dist(cha * chb + sha * shb, reference::cosh_series(s, n)) <= 1e-12);
        prop_assert!(dist(sha * chb + cha * shb, reference::sinh_series(s, n)) <= 1e-12);
    }

    #[test]
    fn real_power_matches_integer_power(u in sector_tc(2.0), m in -6i64..=6) {
        let a = functions::pow_real(u, m as f64).unwrap();
        let b = functions::pow_int(u, m).unwrap();
        prop_assert!(rel_tc(a, b) <= 1e-12, "{a} vs {b}");
    }

    #[test]
    fn hyperbolic_pythagoras(u in disc_tc(3.0)) {
        let (c, s) = (functions::cosh(u).unwrap(), functions::sinh(u).unwrap());
        prop_assert!(dist(c * c - s * s, TwoComplex::ONE) <= 1e-12 * (1.0 + c.modulus().powi(2)));
    }

    // ---- series ----

    #[test]
    fn canonical_horner_matches_direct(coeffs in vec(any_tc(1.0), 1..=32), u in disc_tc(2.0)) {
        let s = PowerSeries::new(coeffs.clone()).unwrap();
        let r = mag(u);
        // Σ (|a_x|+|a_y|)·(|x|+|y|)^l bounds every intermediate in either form
        let scale = coeffs.iter().rev().fold(0.0, |acc, a| acc * r + mag(*a));
        prop_assert!(dist(s.eval(u), s.eval_direct(u)) <= ulps(8.0 * coeffs.len() as f64, scale));
    }

    #[test]
    fn modulus_inequalities(a in any_tc(1e3), b in any_tc(1e3)) {
        let slack = |v: f64| ulps(4.0, v);
        let (da, db) = (a.modulus(), b.modulus());
        let s = (a + b).modulus();
        prop_assert!(s <= da + db + slack(da + db));
        prop_assert!(s + slack(da + db) >= (da - db).abs());
        let (p, bound) = series::modulus_product_bound(a, b);
        prop_assert!(p <= bound + slack(bound));
        prop_assert!((a * a).modulus() <= std::f64::consts::SQRT_2 * da * da + slack(da * da));
    }

    #[test]
    fn power_modulus_bound(u in any_tc(3.0), m in 1i32..=10) {
        let lhs = functions::pow_int(u, m as i64).unwrap().modulus();
        let rhs = 2f64.powf((m - 1) as f64 / 2.0) * u.modulus().powi(m);
        prop_assert!(lhs <= rhs + ulps(4.0 * m as f64, rhs));
    }

    #[test]
    fn product_bound_equality_on_nodal_lines(a in -1e3f64..1e3, b in -1e3f64..1e3, sign in prop::bool::ANY) {
        let s = if sign { 1.0 } else { -1.0 };
        let (p, bound) = series::modulus_product_bound(tc(a, s * a), tc(b, s * b));
        prop_assert!((p - bound).abs() <= ulps(4.0, bound));
    }

    #[test]
    fn constant_ratio_regions(j in -3i32..=3, factor in prop_oneof![Just(0.5), Just(1.0), Just(2.0)]) {
        // a_l = a·q^l in the algebra, with power-of-two radii so that both
        // canonical components survive storage as (x, y) exactly; the moduli
        // settle on the smaller radius at rate factor^{-2l}
        let rp = 2f64.powi(j);
        let rm = rp * factor;
        let coeffs: Vec<TwoComplex> = (0..40)
            .map(|l| CanonicalPair::new(rp.powi(-l), rm.powi(-l)).to_twocomplex())
            .collect();
        let r = PowerSeries::new(coeffs).unwrap().estimate_region().unwrap();
        prop_assert!(rel(r.c_plus, rp) <= 1e-9 && rel(r.c_minus, rm) <= 1e-9, "{r:?}");
        prop_assert!(rel(r.c0, rp.min(rm) / std::f64::consts::SQRT_2) <= 1e-9, "{r:?}");
    }

    #[test]
    fn real_geometric_regions(r in 0.1f64..10.0) {
        let coeffs: Vec<TwoComplex> = (0..40).map(|l| tc(r.powi(-l), 0.0)).collect();
        let g = PowerSeries::new(coeffs).unwrap().estimate_region().unwrap();
        prop_assert!(rel(g.c_plus, r) <= 1e-9 && rel(g.c_minus, r) <= 1e-9, "{g:?}");
        prop_assert!(rel(g.c0, r / std::f64::consts::SQRT_2) <= 1e-9, "{g:?}");
    }

    #[test]
    fn exp_truncation_matches_exp(u in disc_tc(1.0)) {
        let s = PowerSeries::exp_truncation(30);
        prop_assert!(dist(s.eval(u), functions::exp(u).unwrap()) <= 1e-12);
    }

    // ---- analysis ----

    #[test]
    fn path_independence(
        a in any_tc(1.0), b in any_tc(1.0),
        mids in vec(any_tc(1.0), 4),
        which in 0usize..4,
    ) {
        let (name, f) = builtin(which);
        let p1 = Path::open(vec![a, mids[0], mids[1], b]).unwrap();
        let p2 = Path::open(vec![a, mids[2], mids[3], b]).unwrap();
        let i1 = analysis::integrate(&f, &p1, 256).unwrap().value;
        let i2 = analysis::integrate(&f, &p2, 256).unwrap().value;
        prop_assert!(dist(i1, i2) <= 1e-8, "{name}: {i1} vs {i2}");
    }

    #[test]
    fn loops_vanish(vertices in vec(any_tc(1.0), 3..=6), which in 0usize..4) {
        let (name, f) = builtin(which);
        prop_assume!(vertices.windows(2).all(|w| w[0] != w[1]));
        let path = Path::closed(vertices).unwrap();
        let v = analysis::integrate(&f, &path, 128).unwrap().value;
        prop_assert!(v.modulus() <= 1e-8, "{name}: {v}");
    }

    #[test]
    fn central_differences_converge_quadratically(p in any_tc(1.0)) {
        // halving h cuts the derivative error by about four
        let f = TwoComplexFunction::fallible(functions::exp);
        let exact = functions::exp(p).unwrap();
        let err = |h| (analysis::derivative(&f, p, h).unwrap() - exact).modulus();
        let (e1, e2) = (err(1e-2), err(5e-3));
        prop_assert!(e1 / e2 >= 3.0, "{e1} {e2}");
    }

    #[test]
    fn cr_residuals_are_at_rounding_level(p in any_tc(1.0), which in 0usize..4) {
        let (name, f) = builtin(which);
        for h in [1e-3, 5e-4, 1e-4] {
            let r = analysis::check_cr(&f, p, h).unwrap();
            let scale = 1.0 + f.eval(p).unwrap().modulus() * 20.0;
            prop_assert!(r.residual_1.max(r.residual_2) <= ulps(8.0, scale) / h, "{name} {r:?}");
            prop_assert!(r.wave_p.max(r.wave_q) <= ulps(32.0, scale) / (h * h), "{name} {r:?}");
        }
    }

    #[test]
    fn series_derivative_matches_term_differentiation(coeffs in vec(any_tc(1.0), 2..=12), u in disc_tc(0.8)) {
        let s = PowerSeries::new(coeffs).unwrap();
        let d = s.derivative();
        let f = TwoComplexFunction::from_series(s);
        let numeric = analysis::derivative(&f, u, 1e-5).unwrap();
        let scale = 1.0 + d.coeffs().iter().map(|a| a.modulus()).sum::<f64>();
        prop_assert!(dist(numeric, d.eval(u)) <= 1e-8 * scale, "{numeric} vs {}", d.eval(u));
    }

    #[test]
    fn recentering_there_and_back(coeffs in vec(any_tc(1.0), 1..=12), u0 in disc_tc(1.0)) {
        let s = PowerSeries::new(coeffs).unwrap();
        let back = analysis::taylor_recenter(&analysis::taylor_recenter(&s, u0), -u0);
        for (a, b) in s.coeffs().iter().zip(back.coeffs()) {
            prop_assert!(dist(*a, *b) <= 1e-10 * (1.0 + a.modulus()), "{a} vs {b}");
        }
    }

    #[test]
    fn recentered_series_agrees(coeffs in vec(any_tc(1.0), 1..=12), u0 in disc_tc(1.0), w in disc_tc(1.0)) {
        let s = PowerSeries::new(coeffs).unwrap();
        let r = analysis::taylor_recenter(&s, u0);
        let (a, b) = (r.eval(w), s.eval(u0 + w));
        prop_assert!(dist(a, b) <= 1e-10 * (1.0 + b.modulus()), "{a} vs {b}");
    }

    // ---- polynomials ----

    #[test]
    fn factorization_round_trip(roots in vec(any_tc(3.0), 1..=5)) {
        prop_assume!(separated(&roots));
        let p = TwoComplexPolynomial::from_roots(&roots).unwrap();
        let set = polynomials::enumerate_factorizations(&p, 8).unwrap();
        let original: Vec<ComponentRoot> = roots.iter().map(|&u| ComponentRoot::from_twocomplex(u)).collect();
        prop_assert!(set.contains(&original));
        prop_assert!(set.all_verified());
        let m = roots.len();
        prop_assert_eq!(set.len(), (1..=m).product::<usize>());
        for f in &set.factorizations {
            prop_assert!(f.residual < 1e-8);
        }
    }

    #[test]
    fn factorizations_never_invent_roots(roots in vec(any_tc(3.0), 1..=5)) {
        let p = TwoComplexPolynomial::from_roots(&roots).unwrap();
        let set = polynomials::enumerate_factorizations(&p, 8).unwrap();
        let (plus, minus) = p.to_components();
        let (pr, mr) = (plus.roots().unwrap(), minus.roots().unwrap());
        for f in &set.factorizations {
            let mut fp: Vec<_> = f.roots.iter().map(|r| r.v_plus).collect();
            let mut fm: Vec<_> = f.roots.iter().map(|r| r.v_minus).collect();
            let key = |a: &num_complex::Complex64, b: &num_complex::Complex64| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im));
            fp.sort_by(key);
            fm.sort_by(key);
            prop_assert_eq!(&fp, &pr);
            prop_assert_eq!(&fm, &mr);
            for r in f.real_roots().into_iter().flatten() {
                let scale = 1.0 + r.modulus().powi(roots.len() as i32);
                prop_assert!(p.eval(r).modulus() <= 1e-7 * scale, "P({r}) = {}", p.eval(r));
            }
        }
    }
}

fn builtin(which: usize) -> (&'static str, TwoComplexFunction) {
    match which {
        0 => ("u", TwoComplexFunction::new(|u| u)),
        1 => ("u^2", TwoComplexFunction::new(|u| u * u)),
        2 => ("exp", TwoComplexFunction::fallible(functions::exp)),
        _ => ("sin", TwoComplexFunction::new(functions::sin)),
    }
}

/// Component roots pairwise at least 0.1 apart, so every pairing is distinct.
fn separated(roots: &[TwoComplex]) -> bool {
    let c: Vec<CanonicalPair> = roots.iter().map(|u| u.to_canonical()).collect();
    c.iter().enumerate().all(|(i, a)| {
        c[i + 1..]
            .iter()
            .all(|b| (a.v_plus - b.v_plus).abs() > 0.1 && (a.v_minus - b.v_minus).abs() > 0.1)
    })
}
