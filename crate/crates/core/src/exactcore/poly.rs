use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::{Coeff, Rational};

/// Dense univariate polynomial with coefficients ascending by power.
///
/// The coefficient vector never ends in a zero, so the empty vector is the
/// unique zero polynomial and structural equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// The indeterminate λ of ℚ[λ].
pub fn lambda() -> Poly<Rational> {
    Poly::var()
}

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly { coeffs: vec![R::zero(), R::one()] }
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of the `i`-th power (zero past the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale_by(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Horner evaluation in a larger ring `S`, given the embedding of coefficients.
    pub fn eval_in<S: Coeff>(&self, at: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * at.clone() + embed(c))
    }

    /// Substitute another polynomial for the indeterminate.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.eval_in(inner, |c| Poly::constant(c.clone()))
    }

    /// Formal derivative with respect to the indeterminate.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    /// Index of the first coefficient at which `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

impl Poly<Rational> {
    /// Euclidean division over ℚ.
    pub fn div_rem(&self, divisor: &Self) -> crate::Result<(Self, Self)> {
        let lead = divisor
            .leading()
            .cloned()
            .ok_or(crate::Error::DivisionByZeroPolynomial)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Scale to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
            None => Poly::zero(),
        }
    }

    /// Content: the positive rational whose quotient has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::one()
        } else {
            Rational::new(num, den)
        }
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content().recip();
        Poly::new(self.coeffs.iter().map(|a| a * &c).collect())
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    pub fn exact_div(&self, divisor: &Self) -> crate::Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }
}

impl<R: Coeff> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coeff> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

impl<R: Coeff> Add for Poly<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Poly::new(long)
    }
}

impl<R: Coeff> Neg for Poly<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl<R: Coeff> Sub for Poly<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Coeff> Mul for Poly<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let out = R::convolve(&self.coeffs, &rhs.coeffs);
        Poly::new(out)
    }
}

impl<R: Coeff> Coeff for Poly<R> {
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(R::from_rational(r))
    }

    fn scale(&self, r: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].unit_inverse().map(Poly::constant)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;
    use crate::exactcore::LambdaRing;
    use crate::{PolyLambda, PolyXOverLambda};

    fn pl(c: &[i64]) -> PolyLambda {
        Poly::new(c.iter().map(|&i| Rational::from_integer(i.into())).collect())
    }

    #[test]
    fn rational_addition() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }

    #[test]
    fn expand_lambda_product() {
        let l = lambda();
        let p = (l.clone() - PolyLambda::from_int(1)) * (l - PolyLambda::from_int(2));
        assert_eq!(p, pl(&[2, -3, 1]));
    }

    #[test]
    fn difference_of_x_polynomials() {
        let x = PolyXOverLambda::var();
        let l = PolyXOverLambda::lambda();
        let a = x.clone() * x.clone() - l * x.clone();
        let b = x.clone() * x.clone() - x.clone();
        let expected = PolyXOverLambda::monomial(pl(&[1, -1]), 1);
        assert_eq!(a - b, expected);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = pl(&[1, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(pl(&[0, 0]), PolyLambda::zero());
        assert_eq!(PolyLambda::zero().degree(), None);
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(pl(&[2, -3, 1]).eval(&rat(0, 1)), rat(2, 1));
        let beta2 = Poly::new(vec![rat(1, 6), rat(0, 1), rat(-1, 6)]);
        assert_eq!(beta2.eval(&rat(0, 1)), rat(1, 6));
        let x = PolyXOverLambda::var();
        let p = x.clone() * x.clone() - PolyXOverLambda::lambda() * x;
        assert_eq!(p.eval(&PolyLambda::one()), pl(&[1, -1]));
    }

    #[test]
    fn division_and_gcd() {
        let a = pl(&[-1, 0, 1]);
        let b = pl(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, pl(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        assert_eq!(pl(&[2, 4]).gcd(&pl(&[3, 6])), Poly::new(vec![rat(1, 2), rat(1, 1)]));
        assert!(a.div_rem(&PolyLambda::zero()).is_err());
    }

    #[test]
    fn derivative_and_compose() {
        let p = pl(&[1, 2, 3]);
        assert_eq!(p.derivative(), pl(&[2, 6]));
        // p(λ+1) = 3λ² + 8λ + 6
        assert_eq!(p.compose(&pl(&[1, 1])), pl(&[6, 8, 3]));
    }
}
