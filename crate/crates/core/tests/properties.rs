use std::collections::BTreeSet;

use degenerate_bernoulli::bernoulli::{gen_beta, gen_beta_poly, gen_beta_poly_derivative};
use degenerate_bernoulli::cli::table::{Export, FamilyName, TableRequest};
use degenerate_bernoulli::series::degenerate_exp;
use degenerate_bernoulli::triangles::Tables;
use degenerate_bernoulli::verify::{run_suite, run_suite_with_tables, IdentityId, SuiteConfig};
use degenerate_bernoulli::{lambda, LambdaSeries, PolyLambda, RatFun, Rational, TruncatedSeries};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly(max_len: usize) -> impl Strategy<Value = PolyLambda> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(PolyLambda::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = PolyLambda> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn series(order: usize) -> impl Strategy<Value = LambdaSeries> {
    prop::collection::vec(poly(3), order + 1).prop_map(TruncatedSeries::from_egf)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert!((a.clone() + -a.clone()).is_zero());
        prop_assert_eq!(a.clone() * PolyLambda::one(), a);
    }

    #[test]
    fn degree_is_additive(a in nonzero_poly(6), b in nonzero_poly(6)) {
        let d = (a.clone() * b.clone()).degree();
        prop_assert_eq!(d, Some(a.degree().unwrap() + b.degree().unwrap()));
    }

    #[test]
    fn specialize_is_a_homomorphism(a in poly(5), b in poly(5), at in rational()) {
        prop_assert_eq!((a.clone() * b.clone()).eval(&at), a.eval(&at) * b.eval(&at));
        prop_assert_eq!((a.clone() + b.clone()).eval(&at), a.eval(&at) + b.eval(&at));
    }

    #[test]
    fn division_with_remainder(a in poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q * b.clone() + r.clone(), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let (x, y) = (a * c.clone(), b * c.clone());
        let g = x.gcd(&y);
        prop_assert!(x.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(y.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(g.degree() >= c.degree());
    }

    #[test]
    fn normalize_is_idempotent(a in poly(4), b in nonzero_poly(4)) {
        let f = RatFun::normalize(a, b).unwrap();
        let again = RatFun::normalize(f.numer().clone(), f.denom().clone()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn normalize_equality_is_cross_multiplication(
        a in poly(3), b in nonzero_poly(3), c in poly(3), d in nonzero_poly(3), common in nonzero_poly(2),
    ) {
        let same = a.clone() * d.clone() == b.clone() * c.clone();
        let f = RatFun::normalize(a.clone(), b.clone()).unwrap();
        let g = RatFun::normalize(c, d).unwrap();
        prop_assert_eq!(f == g, same);
        let scaled = RatFun::normalize(a * common.clone(), b * common).unwrap();
        prop_assert_eq!(scaled, f);
    }

    #[test]
    fn field_operations(a in nonzero_poly(3), b in nonzero_poly(3), c in nonzero_poly(3)) {
        let f = RatFun::normalize(a.clone(), b.clone()).unwrap();
        let g = RatFun::from_poly(c);
        let q = (f.clone() / g.clone()).unwrap();
        prop_assert_eq!(q * g, f.clone());
        prop_assert!((f.clone() - f).is_zero());
    }

    #[test]
    fn series_product_laws(f in series(5), g in series(5), h in series(5)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn egf_product_matches_ordinary_convolution(f in series(6), g in series(6)) {
        let (a, b) = (f.ogf_coeffs(), g.ogf_coeffs());
        let conv: Vec<PolyLambda> = (0..=6)
            .map(|n| (0..=n).fold(PolyLambda::zero(), |acc, i| acc + a[i].clone() * b[n - i].clone()))
            .collect();
        prop_assert_eq!(TruncatedSeries::from_ogf(conv), f.mul(&g));
    }

    #[test]
    fn series_division_inverts_product(f in series(5), g in series(5), c0 in rational()) {
        prop_assume!(!c0.is_zero());
        let mut coeffs = g.coeffs().to_vec();
        coeffs[0] = PolyLambda::constant(c0);
        let unit = TruncatedSeries::from_egf(coeffs);
        prop_assert_eq!(f.mul(&unit).div(&unit).unwrap(), f);
    }

    #[test]
    fn degenerate_exponential_law(x in rational(), y in rational()) {
        let (ex, ey) = (PolyLambda::constant(x), PolyLambda::constant(y));
        let sum = degenerate_exp(&(ex.clone() + ey.clone()), 8);
        prop_assert_eq!(degenerate_exp(&ex, 8).mul(&degenerate_exp(&ey, 8)), sum);
    }

    #[test]
    fn generalized_polynomials_are_monic(n in 0usize..=12, p in -1i64..=5) {
        let tables = Tables::new(12);
        let b = gen_beta_poly(&tables, n, p).unwrap();
        prop_assert_eq!(b.degree(), Some(n));
        prop_assert_eq!(b.leading().cloned(), Some(PolyLambda::one()));
        prop_assert_eq!(b.constant_term(), gen_beta(&tables, n, p).unwrap());
        if n >= 1 {
            prop_assert_eq!(gen_beta_poly_derivative(&tables, n, p).unwrap(), b.derivative());
        }
    }

    #[test]
    fn export_round_trip(family_index in 0usize..9, max_n in 0usize..=6, p in -1i64..=3, r in 1usize..=3, evaluated in any::<bool>()) {
        let family = FamilyName::ALL[family_index];
        let request = TableRequest {
            family,
            max_n,
            p: matches!(family, FamilyName::GenBeta | FamilyName::GenBetaPoly).then_some(p),
            r: (family == FamilyName::RStirling2).then_some(r),
            lambda: evaluated.then(|| Rational::new((-2).into(), 5.into())),
        };
        let json = request.export().unwrap().to_json();
        prop_assert_eq!(Export::from_json(&json).unwrap().to_json(), json.clone());
        prop_assert_eq!(request.export().unwrap().to_json(), json);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn suite_is_deterministic(mask in 1u32..(1 << 24)) {
        let selection: BTreeSet<IdentityId> =
            IdentityId::ALL.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &id)| id).collect();
        let config = SuiteConfig::new(4, 2, 6);
        let a = run_suite(&selection, &config).unwrap();
        let b = run_suite(&selection, &config).unwrap();
        prop_assert_eq!(a.iter().map(|r| r.identity).collect::<BTreeSet<_>>(), selection);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn any_perturbed_stirling_entry_is_caught(n in 0usize..=6, k_frac in 0.0f64..1.0, off_by in prop_oneof![Just(1i64), Just(-1)]) {
        let k = ((n + 1) as f64 * k_frac) as usize;
        let config = SuiteConfig::new(6, 2, 8);
        let tables = Tables::new(6);
        let s2 = tables.stirling2_table();
        let value = s2.get(n, k).unwrap().clone() + PolyLambda::constant(Rational::from_integer(off_by.into()));
        let corrupted = Tables::from_stirling2(s2.with_entry(n, k, value).unwrap());
        let selection: BTreeSet<IdentityId> =
            IdentityId::ALL.iter().copied().filter(|id| !matches!(id, IdentityId::Thm5 | IdentityId::RemarkMultB)).collect();
        let reports = run_suite_with_tables(&corrupted, &selection, &config).unwrap();
        prop_assert!(reports.iter().any(|r| !r.passed()), "S2({}, {}) {:+} undetected", n, k, off_by);
    }
}

fn lam_times(c: i64) -> PolyLambda {
    lambda().scale_by(&Rational::from_integer(c.into()))
}

fn int(c: i64) -> PolyLambda {
    PolyLambda::constant(Rational::from_integer(c.into()))
}

#[test]
fn stirling_recurrences() {
    let tables = Tables::new(16);
    for n in 0..16usize {
        for k in 0..=n + 1 {
            let get = |f: &dyn Fn(usize, usize) -> PolyLambda, n: usize, k: usize| {
                if k <= n { f(n, k) } else { PolyLambda::zero() }
            };
            let s2 = |n, k| tables.stirling2(n, k).unwrap();
            let s1 = |n, k| tables.stirling1(n, k).unwrap();
            let prev2 = if k == 0 { PolyLambda::zero() } else { get(&s2, n, k - 1) };
            let prev1 = if k == 0 { PolyLambda::zero() } else { get(&s1, n, k - 1) };
            let step2 = int(k as i64) - lam_times(n as i64);
            let step1 = lam_times(k as i64) - int(n as i64);
            assert_eq!(s2(n + 1, k), prev2 + step2 * get(&s2, n, k), "S2({}, {k})", n + 1);
            assert_eq!(s1(n + 1, k), prev1 + step1 * get(&s1, n, k), "S1({}, {k})", n + 1);
        }
    }
}

#[test]
fn triangle_identities_over_wider_ranges() {
    let wide = |names: &[IdentityId], config: SuiteConfig| {
        for r in run_suite(&names.iter().copied().collect(), &config).unwrap() {
            assert!(r.passed(), "{} {}/{}", r.identity, r.cases_passed, r.cases_run);
        }
    };
    wide(&[IdentityId::StirlingDuality], SuiteConfig::new(20, 0, 21));
    wide(&[IdentityId::Eq26To27, IdentityId::Lemma38, IdentityId::Eq32To33], SuiteConfig::new(16, 0, 17));
    wide(&[IdentityId::ClassicalLimits], SuiteConfig::new(14, 0, 16));
}
