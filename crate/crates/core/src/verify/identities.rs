use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::classical;
use super::{CanonicalValue, Counterexample, IdentityId, SuiteConfig};
use crate::bernoulli::*;
use crate::exactcore::{binomial, factorial, Coeff};
use crate::series::{degenerate_exp, degenerate_exp_minus_one, degenerate_log};
use crate::triangles::{
    eulerian_classical, falling_factorial, falling_lambda, falling_lambda_minus_one,
    falling_symbolic, forward_difference, Tables,
};
use crate::{
    Error, LambdaSeries, Poly, PolyLambda, PolyXOverLambda, RatFun, Rational, Result,
    TruncatedSeries,
};

#[derive(Default)]
pub(super) struct Tally {
    pub run: usize,
    pub passed: usize,
    pub first_failure: Option<Counterexample>,
}

impl Tally {
    fn case(&mut self, outcome: Result<Option<Counterexample>>) -> Result<()> {
        self.run += 1;
        match outcome? {
            None => self.passed += 1,
            Some(c) => {
                if self.first_failure.is_none() {
                    self.first_failure = Some(c);
                }
            }
        }
        Ok(())
    }
}

type Assignment = Vec<(&'static str, i64)>;

fn assign(pairs: &[(&'static str, i64)]) -> Assignment {
    pairs.to_vec()
}

fn cmp_rational(a: Assignment, lhs: Rational, rhs: Rational) -> Option<Counterexample> {
    (lhs != rhs).then_some(Counterexample {
        assignment: a,
        lhs: CanonicalValue::Rational(lhs),
        rhs: CanonicalValue::Rational(rhs),
        mismatch_index: None,
    })
}

fn cmp_poly<R: Coeff>(
    a: Assignment,
    lhs: Poly<R>,
    rhs: Poly<R>,
    wrap: fn(Poly<R>) -> CanonicalValue,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        assignment: a,
        mismatch_index: lhs.first_difference(&rhs),
        lhs: wrap(lhs),
        rhs: wrap(rhs),
    })
}

fn cmp_lambda(a: Assignment, lhs: PolyLambda, rhs: PolyLambda) -> Option<Counterexample> {
    cmp_poly(a, lhs, rhs, CanonicalValue::Lambda)
}

fn cmp_x(a: Assignment, lhs: PolyXOverLambda, rhs: PolyXOverLambda) -> Option<Counterexample> {
    cmp_poly(a, lhs, rhs, CanonicalValue::X)
}

fn cmp_series(a: Assignment, lhs: LambdaSeries, rhs: LambdaSeries) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        assignment: a,
        mismatch_index: (0..=lhs.order().min(rhs.order())).find(|&i| lhs.coeff(i) != rhs.coeff(i)),
        lhs: CanonicalValue::Series(lhs),
        rhs: CanonicalValue::Series(rhs),
    })
}

/// First failing comparison across the inner sweep of a case.
fn first<I>(checks: I) -> Result<Option<Counterexample>>
where
    I: IntoIterator<Item = Result<Option<Counterexample>>>,
{
    for c in checks {
        if let Some(f) = c? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn int(i: i64) -> Rational {
    Rational::from_integer(i.into())
}

fn signed(r: Rational, exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) {
        r
    } else {
        -r
    }
}

/// Leading-index range for an identity's cases.
fn case_range(id: IdentityId, config: &SuiteConfig) -> RangeInclusive<usize> {
    use IdentityId::*;
    match id {
        Eq8Pfaff | Eq9Euler => 0..=config.max_p,
        Thm2 | Thm5 | Prop8 | Eq11 | RemarkDiff => 1..=config.max_n,
        _ => 0..=config.max_n,
    }
}

pub(super) fn check_ranges(id: IdentityId, config: &SuiteConfig) -> Result<()> {
    let empty = case_range(id, config).is_empty()
        || (id == IdentityId::Thm5 && config.max_p < 1)
        || (id == IdentityId::Eq32To33 && config.max_r < 1)
        || (id.is_informational() && config.multipliers.is_empty());
    if empty {
        return Err(Error::EmptyRange(id.name().to_string()));
    }
    Ok(())
}

fn p_range(min: i64, config: &SuiteConfig) -> RangeInclusive<i64> {
    min..=config.max_p as i64
}

/// `(e_λ(t) - 1)^k / k!` for `k = 0..=max_k`.
fn stirling2_generating_functions(max_k: usize, order: usize) -> Vec<LambdaSeries> {
    let em1 = degenerate_exp_minus_one::<PolyLambda>(order);
    let mut out = Vec::with_capacity(max_k + 1);
    let mut power = LambdaSeries::one(order);
    for k in 0..=max_k {
        out.push(power.scale(&Rational::new(1.into(), factorial(k))));
        power = power.mul(&em1);
    }
    out
}

pub(super) fn run(id: IdentityId, tables: &Tables, config: &SuiteConfig) -> Result<Tally> {
    use IdentityId::*;
    let mut tally = Tally::default();
    let order = config.truncation;
    let ns = case_range(id, config);
    let zero = Rational::zero();
    match id {
        Thm1 => {
            let gf = carlitz_beta_gf(order)?;
            for n in ns {
                let a = assign(&[("n", n as i64)]);
                tally.case(carlitz_beta(tables, n).map(|b| cmp_lambda(a, b, gf.coeff(n).clone())))?;
            }
        }
        Thm2 => {
            let betas: Vec<_> = (0..=config.max_n)
                .map(|k| carlitz_beta(tables, k))
                .collect::<Result<_>>()?;
            for n in ns {
                let outcome = (0..=n)
                    .try_fold(PolyLambda::zero(), |acc, k| {
                        Ok::<_, Error>(acc + tables.stirling1(n, k)? * betas[k].clone())
                    })
                    .map(|lhs| {
                        let rhs = falling_lambda_minus_one(n).scale(&Rational::new(1.into(), (n + 1).into()));
                        cmp_lambda(assign(&[("n", n as i64)]), lhs, rhs)
                    });
                tally.case(outcome)?;
            }
        }
        Thm3VsGf => {
            let gfs: Vec<_> = p_range(-1, config)
                .map(|p| Ok((p, gen_beta_hypergeometric_gf(p, order)?)))
                .collect::<Result<_>>()?;
            for n in ns {
                tally.case(first(gfs.iter().map(|(p, gf)| {
                    let a = assign(&[("n", n as i64), ("p", *p)]);
                    Ok(cmp_lambda(a, gen_beta_stirling(tables, n, *p)?, gf.coeff(n).clone()))
                })))?;
            }
        }
        Thm4 => {
            for n in ns {
                tally.case(first(p_range(0, config).map(|p| {
                    let a = assign(&[("n", n as i64), ("p", p)]);
                    Ok(cmp_lambda(a, gen_beta_eulerian(tables, n, p)?, gen_beta(tables, n, p)?))
                })))?;
            }
        }
        Thm5 => {
            for n in ns {
                tally.case(first(p_range(1, config).flat_map(|p| {
                    let field = move || -> Result<Option<Counterexample>> {
                        let lhs = gen_beta_rstirling(tables, n, p)?;
                        let rhs = RatFun::from_poly(gen_beta(tables, n, p)?);
                        Ok((lhs != rhs).then(|| Counterexample {
                            assignment: assign(&[("n", n as i64), ("p", p)]),
                            lhs: CanonicalValue::RatFun(lhs),
                            rhs: CanonicalValue::RatFun(rhs),
                            mismatch_index: None,
                        }))
                    };
                    let limit = move || -> Result<Option<Counterexample>> {
                        let lhs = gen_beta_rstirling_limit(tables, n, p as usize)?;
                        let rhs = gen_beta(tables, n, p)?.eval(&Rational::zero());
                        Ok(cmp_rational(assign(&[("n", n as i64), ("p", p), ("lambda", 0)]), lhs, rhs))
                    };
                    [field(), limit()]
                })))?;
            }
        }
        Thm6 => {
            let gfs: Vec<_> = p_range(0, config)
                .map(|p| Ok((p, gen_beta_integral_gf(p, order)?)))
                .collect::<Result<_>>()?;
            for n in ns {
                tally.case(first(gfs.iter().map(|(p, gf)| {
                    let a = assign(&[("n", n as i64), ("p", *p)]);
                    Ok(cmp_lambda(a, gf.coeff(n).clone(), gen_beta(tables, n, *p)?))
                })))?;
            }
        }
        Thm7VsThm9 => {
            let gfs: Vec<_> = p_range(-1, config)
                .map(|p| Ok((p, gen_beta_poly_gf(p, order)?)))
                .collect::<Result<_>>()?;
            for n in ns {
                tally.case(first(gfs.iter().flat_map(|(p, gf)| {
                    let p = *p;
                    let a = assign(&[("n", n as i64), ("p", p)]);
                    let direct = gen_beta_poly(tables, n, p);
                    let via_stirling = gen_beta_poly_stirling(tables, n, p);
                    let oracle = gf.coeff(n).clone();
                    let (a2, direct2) = (a.clone(), direct.clone());
                    [
                        direct.and_then(|l| Ok(cmp_x(a, l, via_stirling?))),
                        direct2.map(|l| cmp_x(a2, l, oracle)),
                    ]
                })))?;
            }
        }
        Prop8 => {
            for n in ns {
                tally.case(first(p_range(-1, config).map(|p| {
                    let a = assign(&[("n", n as i64), ("p", p)]);
                    let lhs = gen_beta_poly(tables, n, p)?.derivative();
                    Ok(cmp_x(a, lhs, gen_beta_poly_derivative(tables, n, p)?))
                })))?;
            }
        }
        Lemma38 => {
            let x = PolyXOverLambda::var();
            let ex = degenerate_exp(&x, order);
            let gfs = stirling2_generating_functions(config.max_n, order);
            for n in ns {
                let shifted: Vec<PolyXOverLambda> = (0..=n + 1)
                    .map(|j| falling_lambda(&(x.clone() + PolyXOverLambda::from_int(j as i64)), n))
                    .collect();
                tally.case(first((0..=n + 1).flat_map(|k| {
                    let a = assign(&[("n", n as i64), ("k", k as i64)]);
                    let direct = if k <= n { tables.stirling2_poly(n, k) } else { Ok(PolyXOverLambda::zero()) };
                    let diff = forward_difference(&shifted, k);
                    let kf = Rational::from_integer(factorial(k));
                    let a2 = a.clone();
                    let oracle = (k <= n).then(|| {
                        let g = gfs[k].map(|c| PolyXOverLambda::constant(c.clone())).mul(&ex);
                        let d = direct.clone();
                        move || Ok(cmp_x(a2, d?, g.coeff(n).clone()))
                    });
                    let diff_check = (|| Ok(cmp_x(a, direct.clone()?.scale(&kf), diff?)))();
                    let oracle_check = oracle.map_or(Ok(None), |f| f());
                    [diff_check, oracle_check]
                })))?;
            }
        }
        Eq8Pfaff | Eq9Euler => {
            let lambda = crate::lambda();
            let one = PolyLambda::one();
            let a = one.clone() - lambda.clone();
            let b = one.clone();
            let u = degenerate_exp_minus_one::<PolyLambda>(order).neg();
            for p in ns {
                let c = PolyLambda::from_int(p as i64 + 2);
                let cr = int(p as i64 + 2);
                let outcome = (|| {
                    let lhs = TruncatedSeries::gauss_2f1(&a, &b, &cr, &u)?;
                    let rhs = if id == Eq8Pfaff {
                        let arg = u.div(&u.sub(&LambdaSeries::one(order)))?;
                        let prefactor = u.neg().binomial_pow(&-a.clone())?;
                        prefactor.mul(&TruncatedSeries::gauss_2f1(&a, &(c.clone() - b.clone()), &cr, &arg)?)
                    } else {
                        let prefactor = u.neg().binomial_pow(&(c.clone() - a.clone() - b.clone()))?;
                        let f = TruncatedSeries::gauss_2f1(&(c.clone() - a.clone()), &(c.clone() - b.clone()), &cr, &u)?;
                        prefactor.mul(&f)
                    };
                    Ok(cmp_series(assign(&[("p", p as i64)]), lhs, rhs))
                })();
                tally.case(outcome)?;
            }
        }
        Eq11 => {
            for n in ns {
                let outcome = (0..=n)
                    .map(|k| eulerian_classical(n, k))
                    .sum::<Result<BigInt>>()
                    .map(|s| {
                        cmp_rational(assign(&[("n", n as i64)]), Rational::from_integer(s), Rational::from_integer(factorial(n)))
                    });
                tally.case(outcome)?;
            }
        }
        Eq12 => {
            for n in ns {
                tally.case(first((0..=n).map(|m| {
                    let lhs = Rational::from_integer(eulerian_classical(n, m)?);
                    let mut rhs = Rational::zero();
                    for k in 0..=n - m {
                        let s2 = tables.stirling2(n, k)?.eval(&zero);
                        rhs += signed(s2 * binomial(n - k, m) * Rational::from_integer(factorial(k)), n - k - m);
                    }
                    Ok(cmp_rational(assign(&[("n", n as i64), ("m", m as i64)]), lhs, rhs))
                })))?;
            }
        }
        Eq13 => {
            let x = Poly::<Rational>::var();
            for n in ns {
                let outcome = (|| {
                    let lhs = Poly::monomial(Rational::one(), n);
                    let mut rhs = Poly::zero();
                    for k in 0..=n {
                        let shifted = x.clone() + Poly::from_int(k as i64);
                        let choose = falling_factorial(&shifted, &Poly::one(), n)
                            .scale(&Rational::new(1.into(), factorial(n)));
                        rhs = rhs + choose.scale(&Rational::from_integer(eulerian_classical(n, k)?));
                    }
                    Ok(cmp_poly(assign(&[("n", n as i64)]), lhs, rhs, CanonicalValue::RationalX))
                })();
                tally.case(outcome)?;
            }
        }
        Eq23 => {
            let gf = gen_beta_hypergeometric_gf(-1, order)?;
            for n in ns {
                let outcome = (|| {
                    let closed = gen_beta(tables, n, -1)?;
                    let a = assign(&[("n", n as i64), ("p", -1)]);
                    let via_sum = cmp_lambda(a.clone(), closed.clone(), gen_beta_stirling(tables, n, -1)?);
                    Ok(via_sum.or_else(|| cmp_lambda(a, closed, gf.coeff(n).clone())))
                })();
                tally.case(outcome)?;
            }
        }
        Eq26To27 => {
            let gfs = stirling2_generating_functions(config.max_n, order);
            for n in ns {
                let values: Vec<PolyLambda> = (0..=n + 1)
                    .map(|j| falling_lambda(&PolyLambda::from_int(j as i64), n))
                    .collect();
                tally.case(first((0..=n + 1).map(|k| {
                    let a = assign(&[("n", n as i64), ("k", k as i64)]);
                    let s = if k <= n { tables.stirling2(n, k)? } else { PolyLambda::zero() };
                    let lhs = s.scale(&Rational::from_integer(factorial(k)));
                    let diff = forward_difference(&values, k)?;
                    let oracle = if k <= n { cmp_lambda(a.clone(), s, gfs[k].coeff(n).clone()) } else { None };
                    Ok(cmp_lambda(a, lhs, diff).or(oracle))
                })))?;
            }
        }
        Eq30 => {
            let t_plus_one = PolyXOverLambda::new(vec![PolyLambda::one(), PolyLambda::one()]);
            for n in ns {
                let outcome = (|| {
                    let mut lhs = PolyXOverLambda::zero();
                    for k in 0..=n {
                        let w = falling_lambda_minus_one(k) * tables.stirling2(n, k)?;
                        let pow = (0..n - k).fold(PolyXOverLambda::one(), |acc, _| acc * t_plus_one.clone());
                        lhs = lhs + pow.scale_by(&w);
                    }
                    let mut rhs = Vec::with_capacity(n + 1);
                    for m in 0..=n {
                        let e = tables.eulerian_degenerate(n, m)?;
                        rhs.push(if (n - m) % 2 == 0 { e } else { -e });
                    }
                    Ok(cmp_poly(assign(&[("n", n as i64)]), lhs, Poly::new(rhs), CanonicalValue::LambdaT))
                })();
                tally.case(outcome)?;
            }
        }
        Eq32To33 => {
            let gfs = stirling2_generating_functions(config.max_n, order);
            let x = PolyXOverLambda::var();
            let shifted: Vec<Vec<LambdaSeries>> = (1..=config.max_r)
                .map(|r| {
                    let er = degenerate_exp(&PolyLambda::from_int(r as i64), order);
                    gfs.iter().map(|g| g.mul(&er)).collect()
                })
                .collect();
            for n in ns {
                tally.case(first((1..=config.max_r).flat_map(|r| {
                    let x_plus_r = x.clone() + PolyXOverLambda::from_int(r as i64);
                    let basis = (|| {
                        let mut rhs = PolyXOverLambda::zero();
                        for k in 0..=n {
                            rhs = rhs + falling_symbolic(k).scale_by(&tables.r_stirling2(n, k, r)?);
                        }
                        let a = assign(&[("n", n as i64), ("r", r as i64)]);
                        Ok(cmp_x(a, falling_lambda(&x_plus_r, n), rhs))
                    })();
                    let coeffs: Vec<_> = (0..=n)
                        .map(|k| {
                            let a = assign(&[("n", n as i64), ("r", r as i64), ("k", k as i64)]);
                            let oracle = shifted[r - 1][k].coeff(n).clone();
                            Ok(cmp_lambda(a, tables.r_stirling2(n, k, r)?, oracle))
                        })
                        .collect();
                    std::iter::once(basis).chain(coeffs)
                })))?;
            }
        }
        RemarkAdd => {
            for n in ns {
                tally.case(first(p_range(0, config).map(|p| {
                    let s = remark_addition(tables, n, p)?;
                    Ok(cmp_poly(assign(&[("n", n as i64), ("p", p)]), s.lhs, s.rhs, CanonicalValue::XY))
                })))?;
            }
        }
        RemarkDiff => {
            for n in ns {
                tally.case(first(p_range(0, config).map(|p| {
                    let s = remark_difference(tables, n, p)?;
                    Ok(cmp_x(assign(&[("n", n as i64), ("p", p)]), s.lhs, s.rhs))
                })))?;
            }
        }
        RemarkMultA | RemarkMultB => {
            let reading = if id == RemarkMultA {
                MultiplicationReading::OverMMinusOne
            } else {
                MultiplicationReading::OverMThenMinusOne
            };
            for n in ns {
                tally.case(first(p_range(0, config).flat_map(|p| {
                    config.multipliers.iter().map(move |&m| {
                        let s = remark_multiplication(tables, n, p, m, reading)?;
                        Ok(cmp_x(assign(&[("n", n as i64), ("p", p), ("m", m as i64)]), s.lhs, s.rhs))
                    })
                })))?;
            }
        }
        StirlingDuality => {
            let log = degenerate_log::<PolyLambda>(order);
            let mut log_powers = Vec::with_capacity(config.max_n + 1);
            let mut power = LambdaSeries::one(order);
            for k in 0..=config.max_n {
                log_powers.push(power.scale(&Rational::new(1.into(), factorial(k))));
                power = power.mul(&log);
            }
            for n in ns {
                tally.case(first((0..=n).map(|k| {
                    let a = assign(&[("n", n as i64), ("k", k as i64)]);
                    let delta = if n == k { PolyLambda::one() } else { PolyLambda::zero() };
                    let mut fwd = PolyLambda::zero();
                    let mut back = PolyLambda::zero();
                    for l in k..=n {
                        fwd = fwd + tables.stirling2(n, l)? * tables.stirling1(l, k)?;
                        back = back + tables.stirling1(n, l)? * tables.stirling2(l, k)?;
                    }
                    let oracle = cmp_lambda(a.clone(), tables.stirling1(n, k)?, log_powers[k].coeff(n).clone());
                    Ok(cmp_lambda(a.clone(), fwd, delta.clone())
                        .or_else(|| cmp_lambda(a, back, delta))
                        .or(oracle))
                })))?;
            }
        }
        ClassicalLimits => {
            let s1 = classical::stirling1_signed(config.max_n);
            let s2 = classical::stirling2(config.max_n);
            let eu = classical::eulerian(config.max_n);
            let bern = classical::bernoulli(config.max_n);
            for n in ns {
                let outcome = (|| {
                    for k in 0..=n {
                        let a = assign(&[("n", n as i64), ("k", k as i64)]);
                        let checks = [
                            (tables.stirling1(n, k)?, &s1[n][k]),
                            (tables.stirling2(n, k)?, &s2[n][k]),
                            (tables.eulerian_degenerate(n, k)?, &eu[n][k]),
                        ];
                        for (value, expected) in checks {
                            let f = cmp_rational(a.clone(), value.eval(&zero), Rational::from_integer(expected.clone()));
                            if f.is_some() {
                                return Ok(f);
                            }
                        }
                    }
                    let b = carlitz_beta(tables, n)?.eval(&zero);
                    Ok(cmp_rational(assign(&[("n", n as i64)]), b, bern[n].clone()))
                })();
                tally.case(outcome)?;
            }
        }
    }
    Ok(tally)
}
