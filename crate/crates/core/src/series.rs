//! Truncated formal power series in exponential-generating-function form.
//!
//! A series of order `N` stores `c_0..=c_N` and stands for `Σ c_n tⁿ/n!`.
//! These are the generating-function oracles that every closed form is
//! checked against.

use num_traits::{One, Zero};

use crate::exactcore::{binomial, factorial, Coeff, LambdaRing, Rational};
use crate::triangles::{falling_factorial, falling_lambda, falling_lambda_minus_one};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Coeff> TruncatedSeries<R> {
    /// From EGF coefficients `c_n = n!·[tⁿ]`. The order is `coeffs.len() - 1`.
    pub fn from_egf(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncatedSeries { coeffs }
    }

    /// From ordinary coefficients `[tⁿ]`.
    pub fn from_ogf(coeffs: Vec<R>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::from_integer(factorial(n))))
            .collect();
        TruncatedSeries::from_egf(coeffs)
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(R::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `n!·[tⁿ]`.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn ogf_coeffs(&self) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::new(1.into(), factorial(n))))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() + other.coeffs[n].clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|a| a.scale(r))
    }

    /// EGF product: `c_n(fg) = Σ C(n,i) c_i(f) c_{n-i}(g)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                    .fold(R::zero(), |acc, i| {
                        acc + self.coeffs[i].scale(&binomial(n, i)) * other.coeffs[n - i].clone()
                    })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `h` with `h·g = f` through the common order.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let inv0 = divisor.coeffs[0]
            .unit_inverse()
            .ok_or(Error::SeriesNotInvertible)?;
        let order = self.order().min(divisor.order());
        let mut h: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (i, hi) in h.iter().enumerate() {
                let g = &divisor.coeffs[n - i];
                if g.is_zero() || hi.is_zero() {
                    continue;
                }
                acc = acc - (hi.clone() * g.clone()).scale(&binomial(n, i));
            }
            h.push(acc * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: h })
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(TruncatedSeries::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `f(g) = Σ c_k(f)·g^k/k!`; `g(0)` must vanish.
    ///
    /// The powers `g^k/k!` keep integral EGF coefficients whenever `g` has them.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let g = inner.truncate(order);
        let mut acc = TruncatedSeries::constant(self.coeffs[0].clone(), order);
        let mut power = TruncatedSeries::one(order);
        for k in 1..=order {
            power = power.mul(&g).scale(&Rational::new(1.into(), k.into()));
            if !self.coeffs[k].is_zero() {
                acc = acc.add(&power.scale_by(&self.coeffs[k]));
            }
        }
        Ok(acc)
    }

    /// `f/t`, defined when `f(0) = 0`; the order drops by one.
    pub fn div_by_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.order() == 0 {
            return Err(Error::InsufficientSeriesOrder);
        }
        Ok(TruncatedSeries {
            coeffs: (1..=self.order())
                .map(|n| self.coeffs[n].scale(&Rational::new(1.into(), n.into())))
                .collect(),
        })
    }

    /// `t·f`; the order rises by one.
    pub fn mul_by_t(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c.scale(&Rational::from_integer((m + 1).into()))),
        );
        TruncatedSeries { coeffs }
    }

    /// `(1+u)^α = Σ C(α,k) u^k` with `C(α,k) = α(α-1)⋯(α-k+1)/k!`; `u(0)` must vanish.
    pub fn binomial_pow(&self, alpha: &R) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut acc = TruncatedSeries::zero(order);
        let mut power = TruncatedSeries::one(order);
        for k in 0..=order {
            let c = falling_factorial(alpha, &R::one(), k)
                .scale(&Rational::new(1.into(), factorial(k)));
            acc = acc.add(&power.scale_by(&c));
            power = power.mul(self);
        }
        Ok(acc)
    }

    /// Formal Gauss series `Σ ⟨a⟩_k⟨b⟩_k/⟨c⟩_k · u^k/k!`; `u(0)` must vanish.
    pub fn gauss_2f1(a: &R, b: &R, c: &Rational, u: &Self) -> Result<Self> {
        if !u.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = u.order();
        let mut acc = TruncatedSeries::zero(order);
        let mut power = TruncatedSeries::one(order);
        // running ⟨a⟩_k⟨b⟩_k and ⟨c⟩_k·k!
        let mut top = R::one();
        let mut bottom = Rational::one();
        for k in 0..=order {
            if bottom.is_zero() {
                return Err(Error::InvalidLowerParameter);
            }
            acc = acc.add(&power.scale_by(&top.scale(&bottom.recip())));
            let kr = R::from_int(k as i64);
            top = top * (a.clone() + kr.clone()) * (b.clone() + kr);
            bottom *= (c + Rational::from_integer(k.into())) * Rational::from_integer((k + 1).into());
            power = power.mul(u);
        }
        Ok(acc)
    }
}

/// `e_λ^x(t) = Σ (x)_{n,λ} tⁿ/n!`.
pub fn degenerate_exp<R: LambdaRing>(x: &R, order: usize) -> TruncatedSeries<R> {
    TruncatedSeries::from_egf((0..=order).map(|n| falling_lambda(x, n)).collect())
}

/// `log_λ(1+t)`, the compositional inverse of `e_λ(t) - 1`.
///
/// `c_n = λ^{n-1}(1)_{n,1/λ} = (λ-1)(λ-2)⋯(λ-n+1)`, kept inside ℚ[λ].
pub fn degenerate_log<R: LambdaRing>(order: usize) -> TruncatedSeries<R> {
    let mut coeffs = vec![R::zero()];
    coeffs.extend((1..=order).map(|n| R::from_poly_lambda(&falling_lambda_minus_one(n - 1))));
    TruncatedSeries::from_egf(coeffs)
}

/// `e_λ(t) - 1`.
pub fn degenerate_exp_minus_one<R: LambdaRing>(order: usize) -> TruncatedSeries<R> {
    let mut s = degenerate_exp(&R::one(), order);
    s.coeffs[0] = R::zero();
    s
}
