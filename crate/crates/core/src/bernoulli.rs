//! Carlitz degenerate Bernoulli numbers and the generalized degenerate
//! Bernoulli numbers `β^{(p)}_{n,λ}` and polynomials `β^{(p)}_{n,λ}(x)`.
//!
//! `β^{(p)}_{n,λ}` is defined by
//! `₂F₁(1-λ, 1; p+2; 1-e_λ(t)) = Σ β^{(p)}_{n,λ} tⁿ/n!` for integers
//! `p ≥ -1`, and `β^{(p)}_{n,λ}(x)` by multiplying that series with
//! `e_λ^x(t)`. The normative route for numbers is the finite sum over
//! `S_{2,λ}(n,k)`; the hypergeometric series, Eulerian sum, r-Stirling
//! double sum and unit-interval integral are independent cross-checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactcore::{binomial, factorial, Coeff, LambdaRing, Rational};
use crate::series::{degenerate_exp, degenerate_exp_minus_one};
use crate::triangles::{
    falling_factorial, falling_lambda, falling_lambda_minus_one, falling_lambda_symbolic,
    rising_factorial, Tables,
};
use crate::{
    Error, LambdaSeries, Poly, PolyLambda, PolyXOverLambda, PolyXYOverLambda, RatFun, Result,
    TruncatedSeries, XLambdaSeries,
};

fn check_p(p: i64, min: i64) -> Result<()> {
    if p < min {
        return Err(Error::ParameterOutOfRange(format!("p = {p} is below {min}")));
    }
    Ok(())
}

fn int(i: i64) -> Rational {
    Rational::from_integer(i.into())
}

fn recip_int(i: BigInt) -> Rational {
    Rational::new(1.into(), i)
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `β_{n,λ} = Σ_k (λ-1)⋯(λ-k)/(k+1) · S_{2,λ}(n,k)`.
pub fn carlitz_beta(tables: &Tables, n: usize) -> Result<PolyLambda> {
    (0..=n).try_fold(PolyLambda::zero(), |acc, k| {
        let s = tables.stirling2(n, k)?;
        Ok(acc + (falling_lambda_minus_one(k) * s).scale(&recip_int((k + 1).into())))
    })
}

/// `t/(e_λ(t) - 1)` to the given order, after cancelling the common `t`.
pub fn carlitz_beta_gf(order: usize) -> Result<LambdaSeries> {
    let quotient = degenerate_exp_minus_one::<PolyLambda>(order + 1).div_by_t()?;
    LambdaSeries::one(order).div(&quotient)
}

/// `t e_λ^x(t)/(e_λ(t) - 1)`, the Carlitz polynomial generating function.
pub fn carlitz_beta_poly_gf(order: usize) -> Result<XLambdaSeries> {
    let numbers = carlitz_beta_gf(order)?.map(|c| PolyXOverLambda::constant(c.clone()));
    Ok(numbers.mul(&degenerate_exp(&PolyXOverLambda::var(), order)))
}

/// `Σ_k (λ-1)⋯(λ-k)/C(p+k+1, p+1) · S_{2,λ}(n,k)`, valid for `p ≥ -1`.
pub fn gen_beta_stirling(tables: &Tables, n: usize, p: i64) -> Result<PolyLambda> {
    check_p(p, -1)?;
    let q = (p + 1) as usize;
    (0..=n).try_fold(PolyLambda::zero(), |acc, k| {
        let s = tables.stirling2(n, k)?;
        let w = binomial(q + k, q).recip();
        Ok(acc + (falling_lambda_minus_one(k) * s).scale(&w))
    })
}

/// `β^{(p)}_{n,λ}`. For `p = -1` this is the closed form `(λ-1)_{n,λ}`;
/// otherwise the `S_{2,λ}` sum.
pub fn gen_beta(tables: &Tables, n: usize, p: i64) -> Result<PolyLambda> {
    check_p(p, -1)?;
    if p == -1 {
        return Ok(falling_lambda(&(crate::lambda() - PolyLambda::one()), n));
    }
    gen_beta_stirling(tables, n, p)
}

/// `β^{(p)}_{n,λ}` for `0 ≤ n ≤ max_n`.
pub fn gen_beta_row(tables: &Tables, max_n: usize, p: i64) -> Result<Vec<PolyLambda>> {
    (0..=max_n).map(|n| gen_beta(tables, n, p)).collect()
}

/// The series `₂F₁(1-λ, 1; p+2; 1-e_λ(t))`.
pub fn gen_beta_hypergeometric_gf(p: i64, order: usize) -> Result<LambdaSeries> {
    check_p(p, -1)?;
    let u = degenerate_exp_minus_one::<PolyLambda>(order).neg();
    let a = PolyLambda::one() - crate::lambda();
    TruncatedSeries::gauss_2f1(&a, &PolyLambda::one(), &int(p + 2), &u)
}

/// `(p+1)/(n+p+1) · Σ_k ⟨n k⟩_λ (-1)^{n-k} / C(p+n, p+k)`, for `p ≥ 0`.
pub fn gen_beta_eulerian(tables: &Tables, n: usize, p: i64) -> Result<PolyLambda> {
    check_p(p, 0)?;
    let p = p as usize;
    let sum = (0..=n).try_fold(PolyLambda::zero(), |acc, k| {
        let e = tables.eulerian_degenerate(n, k)?;
        let w = sign(n - k) * binomial(p + n, p + k).recip();
        Ok::<_, Error>(acc + e.scale(&w))
    })?;
    Ok(sum.scale(&Rational::new((p + 1).into(), (n + p + 1).into())))
}

/// `⟨1⟩_{j,1/λ} = Π_{i<j} (λ+i)/λ`, assembled in ℚ(λ).
fn rising_one_reciprocal_lambda(j: usize) -> RatFun {
    let lambda = crate::lambda();
    (0..j).fold(RatFun::from_poly(PolyLambda::one()), |acc, i| {
        let factor = RatFun::normalize(lambda.clone() + PolyLambda::from_int(i as i64), lambda.clone())
            .expect("λ is nonzero");
        acc * factor
    })
}

/// The r-Stirling double sum evaluated in ℚ(λ) with the prefactor
/// `(p+1)/⟨1⟩_{p+1,1/λ}` and each `⟨1⟩_{p+k+1,1/λ}` kept as field elements.
///
/// No domain check: at `p = 0` the r-Stirling numbers are read as
/// `S_{2,λ}(m,k|0) = S_{2,λ}(m,k)`.
pub fn gen_beta_rstirling_formula(tables: &Tables, n: usize, p: usize) -> Result<RatFun> {
    let lambda = RatFun::from_poly(crate::lambda());
    let prefactor = (RatFun::from_rational(int((p + 1) as i64)) / rising_one_reciprocal_lambda(p + 1))?;
    let mut sum = RatFun::from_poly(PolyLambda::zero());
    let mut neg_lambda_pow = RatFun::from_poly(PolyLambda::one());
    for k in 0..=n {
        let weight = neg_lambda_pow.clone()
            * RatFun::from_rational(recip_int((p + k + 1).into()))
            * rising_one_reciprocal_lambda(p + k + 1);
        let mut inner = PolyLambda::zero();
        for m in k..=n {
            let rs = tables.r_stirling2(m, k, p)?;
            let f = falling_lambda(&PolyLambda::from_int(k as i64), n - m);
            inner = inner + (rs * f).scale(&binomial(n, m));
        }
        sum = sum + weight * RatFun::from_poly(inner);
        neg_lambda_pow = neg_lambda_pow * -lambda.clone();
    }
    Ok(prefactor * sum)
}

/// The r-Stirling double-sum representation for `n ≥ 1`, `p ≥ 1`, in ℚ(λ).
pub fn gen_beta_rstirling(tables: &Tables, n: usize, p: i64) -> Result<RatFun> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange("n must be at least 1".into()));
    }
    check_p(p, 1)?;
    gen_beta_rstirling_formula(tables, n, p as usize)
}

/// The same double sum with the Pochhammer ratio pre-simplified:
/// `(-λ)^k ⟨1⟩_{p+k+1,1/λ}/⟨1⟩_{p+1,1/λ} = (-1)^k (λ+p+1)⋯(λ+p+k)`.
pub fn gen_beta_rstirling_simplified(tables: &Tables, n: usize, p: i64) -> Result<PolyLambda> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange("n must be at least 1".into()));
    }
    check_p(p, 1)?;
    let p = p as usize;
    let shift = crate::lambda() + PolyLambda::from_int((p + 1) as i64);
    let mut sum = PolyLambda::zero();
    for k in 0..=n {
        let ratio = rising_factorial(&shift, &PolyLambda::one(), k);
        let w = sign(k) * recip_int((p + k + 1).into()) * int((p + 1) as i64);
        for m in k..=n {
            let rs = tables.r_stirling2(m, k, p)?;
            let f = falling_lambda(&PolyLambda::from_int(k as i64), n - m);
            sum = sum + (ratio.clone() * rs * f).scale(&(w.clone() * binomial(n, m)));
        }
    }
    Ok(sum)
}

/// The r-Stirling expansion with the Euler-transform factor kept as
/// `e_λ^{p+λ}(t) = e_λ^p(t)(1 + λt)`: the trailing factor is
/// `(λ)_{n-m,λ}` rather than `(k)_{n-m,λ}`. Defined for `p ≥ 0`; at
/// `p = 0` the r-Stirling numbers are `S_{2,λ}(m,k)`.
pub fn gen_beta_rstirling_corrected(tables: &Tables, n: usize, p: i64) -> Result<PolyLambda> {
    check_p(p, 0)?;
    let p = p as usize;
    let shift = crate::lambda() + PolyLambda::from_int((p + 1) as i64);
    let mut sum = PolyLambda::zero();
    for k in 0..=n {
        let ratio = rising_factorial(&shift, &PolyLambda::one(), k);
        let w = sign(k) * recip_int((p + k + 1).into()) * int((p + 1) as i64);
        for m in k..=n {
            let rs = tables.r_stirling2(m, k, p)?;
            let f = falling_lambda(&crate::lambda(), n - m);
            sum = sum + (ratio.clone() * rs * f).scale(&(w.clone() * binomial(n, m)));
        }
    }
    Ok(sum)
}

/// The displayed λ → 0 limit of the r-Stirling representation:
/// `(p+1)/p! Σ_m Σ_k C(n,m)(-1)^k (p+k)!/(p+k+1) {m+p brace k+p}_p (k)_{n-m}`,
/// with `(k)_{n-m}` the classical falling factorial.
pub fn gen_beta_rstirling_limit(tables: &Tables, n: usize, p: usize) -> Result<Rational> {
    let zero = Rational::zero();
    let mut acc = Rational::zero();
    for m in 0..=n {
        for k in 0..=m {
            let rs = tables.r_stirling2(m, k, p)?.eval(&zero);
            let fall = falling_factorial(&int(k as i64), &int(1), n - m);
            acc += binomial(n, m)
                * sign(k)
                * Rational::new(factorial(p + k), (p + k + 1).into())
                * rs
                * fall;
        }
    }
    Ok(acc * Rational::new((p + 1).into(), factorial(p)))
}

/// `∫₀¹ f(x) dx` for a polynomial with coefficients in any ℚ-algebra.
pub fn integrate_unit_interval<R: Coeff>(f: &Poly<R>) -> R {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(R::zero(), |acc, (j, c)| acc + c.scale(&recip_int((j + 1).into())))
}

/// `(p+1)∫₀¹ (1-x)^p (1 - x(1-e_λ(t)))^{λ-1} dx`, integrated termwise in
/// `x` after expanding the binomial power in `x(1-e_λ(t))`.
pub fn gen_beta_integral_gf(p: i64, order: usize) -> Result<LambdaSeries> {
    check_p(p, 0)?;
    let p = p as usize;
    let one_minus_x = Poly::new(vec![int(1), int(-1)]);
    let weight = (0..p).fold(Poly::<Rational>::one(), |acc, _| acc * one_minus_x.clone());
    let one_minus_e = degenerate_exp_minus_one::<PolyLambda>(order).neg();
    let alpha = crate::lambda() - PolyLambda::one();
    let mut acc = LambdaSeries::zero(order);
    let mut power = LambdaSeries::one(order);
    for k in 0..=order {
        // C(λ-1, k)(-1)^k (1-e)^k x^k
        let coef = falling_factorial(&alpha, &PolyLambda::one(), k)
            .scale(&(recip_int(factorial(k)) * sign(k)));
        let moment = integrate_unit_interval(&(weight.clone() * Poly::monomial(int(1), k)));
        acc = acc.add(&power.scale_by(&coef.scale(&moment)));
        power = power.mul(&one_minus_e);
    }
    Ok(acc.scale(&int((p + 1) as i64)))
}

/// `n!·[tⁿ]` of the unit-interval integral representation.
pub fn gen_beta_integral(n: usize, p: i64) -> Result<PolyLambda> {
    Ok(gen_beta_integral_gf(p, n)?.coeff(n).clone())
}

/// `β^{(p)}_{n,λ}(x) = Σ_l C(n,l) β^{(p)}_{l,λ} (x)_{n-l,λ}`.
pub fn gen_beta_poly(tables: &Tables, n: usize, p: i64) -> Result<PolyXOverLambda> {
    let numbers = gen_beta_row(tables, n, p)?;
    Ok((0..=n).fold(PolyXOverLambda::zero(), |acc, l| {
        let b = numbers[l].scale(&binomial(n, l));
        acc + falling_lambda_symbolic(n - l).scale_by(&b)
    }))
}

/// `β^{(p)}_{n,λ}(x) = Σ_k (λ-1)⋯(λ-k)/C(p+k+1,p+1) · S_{2,λ}(n,k|x)`.
pub fn gen_beta_poly_stirling(tables: &Tables, n: usize, p: i64) -> Result<PolyXOverLambda> {
    check_p(p, -1)?;
    let q = (p + 1) as usize;
    (0..=n).try_fold(PolyXOverLambda::zero(), |acc, k| {
        let s = tables.stirling2_poly(n, k)?;
        let w = falling_lambda_minus_one(k).scale(&binomial(q + k, q).recip());
        Ok(acc + s.scale_by(&w))
    })
}

/// `₂F₁(1-λ, 1; p+2; 1-e_λ(t)) e_λ^x(t)`.
pub fn gen_beta_poly_gf(p: i64, order: usize) -> Result<XLambdaSeries> {
    let numbers = gen_beta_hypergeometric_gf(p, order)?.map(|c| PolyXOverLambda::constant(c.clone()));
    Ok(numbers.mul(&degenerate_exp(&PolyXOverLambda::var(), order)))
}

/// `Σ_{l=1}^{n} (-λ)^{l-1}(l-1)! C(n,l) β^{(p)}_{n-l,λ}(x)`, the x-derivative.
pub fn gen_beta_poly_derivative(tables: &Tables, n: usize, p: i64) -> Result<PolyXOverLambda> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange("n must be at least 1".into()));
    }
    let neg_lambda = -crate::lambda();
    let mut acc = PolyXOverLambda::zero();
    let mut pow = PolyLambda::one();
    for l in 1..=n {
        let c = pow.scale(&(Rational::from_integer(factorial(l - 1)) * binomial(n, l)));
        acc = acc + gen_beta_poly(tables, n - l, p)?.scale_by(&c);
        pow = pow * neg_lambda.clone();
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenBernoulliNumber {
    pub n: usize,
    pub p: i64,
    pub value: PolyLambda,
}

impl GenBernoulliNumber {
    pub fn compute(tables: &Tables, n: usize, p: i64) -> Result<Self> {
        Ok(GenBernoulliNumber { n, p, value: gen_beta(tables, n, p)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenBernoulliPolynomial {
    pub n: usize,
    pub p: i64,
    pub value: PolyXOverLambda,
}

impl GenBernoulliPolynomial {
    pub fn compute(tables: &Tables, n: usize, p: i64) -> Result<Self> {
        Ok(GenBernoulliPolynomial { n, p, value: gen_beta_poly(tables, n, p)? })
    }

    pub fn at_zero(&self) -> PolyLambda {
        self.value.eval(&PolyLambda::zero())
    }
}

/// Two sides of a shift/scaling identity for `β^{(p)}_{n,λ}(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Sides<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Which reading of the step in `(x)_{n-k, λ/m-1}` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplicationReading {
    /// `λ/(m-1)`
    OverMMinusOne,
    /// `λ/m - 1`
    OverMThenMinusOne,
}

fn embed_x(p: &PolyXOverLambda) -> PolyXYOverLambda {
    PolyXYOverLambda::constant(p.clone())
}

/// `β_n(x+y)` against `Σ_k C(n,k) β_k(x) (y)_{n-k,λ}` in ℚ[λ][x][y].
pub fn remark_addition(tables: &Tables, n: usize, p: i64) -> Result<Sides<PolyXYOverLambda>> {
    let y = PolyXYOverLambda::var();
    let x_plus_y = Poly::new(vec![PolyXOverLambda::var(), PolyXOverLambda::one()]);
    let lhs = gen_beta_poly(tables, n, p)?.eval_in(&x_plus_y, |c| embed_x(&PolyXOverLambda::constant(c.clone())));
    let mut rhs = PolyXYOverLambda::zero();
    for k in 0..=n {
        let b = gen_beta_poly(tables, k, p)?.scale(&binomial(n, k));
        rhs = rhs + embed_x(&b) * falling_lambda(&y, n - k);
    }
    Ok(Sides { lhs, rhs })
}

/// `β_n(x+1) - β_n(x)` against `Σ_{k<n} C(n,k) β_k(x) (1)_{n-k,λ}`.
pub fn remark_difference(tables: &Tables, n: usize, p: i64) -> Result<Sides<PolyXOverLambda>> {
    let b = gen_beta_poly(tables, n, p)?;
    let shifted = b.compose(&Poly::new(vec![PolyLambda::one(), PolyLambda::one()]));
    let lhs = shifted - b;
    let mut rhs = PolyXOverLambda::zero();
    for k in 0..n {
        let c = falling_lambda(&PolyLambda::one(), n - k).scale(&binomial(n, k));
        rhs = rhs + gen_beta_poly(tables, k, p)?.scale_by(&c);
    }
    Ok(Sides { lhs, rhs })
}

/// `β_n(mx)` against `Σ_k C(n,k) β_k(x) (m-1)^{n-k} (x)_{n-k,μ}` for the chosen step `μ`.
pub fn remark_multiplication(
    tables: &Tables,
    n: usize,
    p: i64,
    m: usize,
    reading: MultiplicationReading,
) -> Result<Sides<PolyXOverLambda>> {
    if m < 2 {
        return Err(Error::ParameterOutOfRange(format!("m = {m} must be at least 2")));
    }
    let mr = int(m as i64);
    let step = match reading {
        MultiplicationReading::OverMMinusOne => crate::lambda().scale(&(mr.clone() - int(1)).recip()),
        MultiplicationReading::OverMThenMinusOne => {
            crate::lambda().scale(&mr.recip()) - PolyLambda::one()
        }
    };
    let step = PolyXOverLambda::from_poly_lambda(&step);
    let x = PolyXOverLambda::var();
    let lhs = gen_beta_poly(tables, n, p)?.compose(&Poly::monomial(PolyLambda::constant(mr.clone()), 1));
    let mut rhs = PolyXOverLambda::zero();
    for k in 0..=n {
        let c = num_traits::pow(mr.clone() - int(1), n - k) * binomial(n, k);
        let term = gen_beta_poly(tables, k, p)? * falling_factorial(&x, &step, n - k);
        rhs = rhs + term.scale(&c);
    }
    Ok(Sides { lhs, rhs })
}

/// Pass/fail of each identity listed for `β^{(p)}_{n,λ}(x)` at one `(n, p, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkReport {
    pub n: usize,
    pub p: i64,
    pub m: usize,
    pub addition: bool,
    pub difference: bool,
    pub multiplication_over_m_minus_one: bool,
    pub multiplication_over_m_then_minus_one: bool,
}

pub fn verify_remark_identities(tables: &Tables, n: usize, p: i64, m: usize) -> Result<RemarkReport> {
    check_p(p, 0)?;
    if m < 2 {
        return Err(Error::ParameterOutOfRange(format!("m = {m} must be at least 2")));
    }
    Ok(RemarkReport {
        n,
        p,
        m,
        addition: remark_addition(tables, n, p)?.holds(),
        difference: remark_difference(tables, n, p)?.holds(),
        multiplication_over_m_minus_one: remark_multiplication(
            tables,
            n,
            p,
            m,
            MultiplicationReading::OverMMinusOne,
        )?
        .holds(),
        multiplication_over_m_then_minus_one: remark_multiplication(
            tables,
            n,
            p,
            m,
            MultiplicationReading::OverMThenMinusOne,
        )?
        .holds(),
    })
}
