use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::Rational;
use super::poly::Poly;
use crate::{Error, PolyLambda, Result};

/// Element of ℚ(λ) in canonical form: coprime numerator and denominator,
/// denominator monic. Structural equality decides field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: PolyLambda,
    den: PolyLambda,
}

impl RatFun {
    pub fn normalize(num: PolyLambda, den: PolyLambda) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RatFun { num, den: PolyLambda::one() });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lead = den.leading().expect("nonzero").recip();
        Ok(RatFun {
            num: num.scale_by(&lead),
            den: den.scale_by(&lead),
        })
    }

    pub fn from_poly(p: PolyLambda) -> Self {
        RatFun { num: p, den: PolyLambda::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        RatFun::from_poly(Poly::constant(r))
    }

    pub fn numer(&self) -> &PolyLambda {
        &self.num
    }

    pub fn denom(&self) -> &PolyLambda {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator, when the denominator has cancelled to one.
    pub fn as_poly(&self) -> Option<&PolyLambda> {
        self.den.is_one_poly().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        RatFun::normalize(self.den.clone(), self.num.clone())
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for PolyLambda {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

impl From<PolyLambda> for RatFun {
    fn from(p: PolyLambda) -> Self {
        RatFun::from_poly(p)
    }
}

fn canon(num: PolyLambda, den: PolyLambda) -> RatFun {
    RatFun::normalize(num, den).expect("product of nonzero denominators")
}

impl Add for RatFun {
    type Output = RatFun;

    fn add(self, rhs: RatFun) -> RatFun {
        if self.den == rhs.den {
            return canon(self.num + rhs.num, self.den);
        }
        canon(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Neg for RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        RatFun { num: -self.num, den: self.den }
    }
}

impl Sub for RatFun {
    type Output = RatFun;

    fn sub(self, rhs: RatFun) -> RatFun {
        self + (-rhs)
    }
}

impl Mul for RatFun {
    type Output = RatFun;

    fn mul(self, rhs: RatFun) -> RatFun {
        canon(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFun {
    type Output = Result<RatFun>;

    fn div(self, rhs: RatFun) -> Result<RatFun> {
        RatFun::normalize(self.num * rhs.den, self.den * rhs.num)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{}", crate::cli::format::pretty_lambda(p)),
            None => write!(
                f,
                "({}) / ({})",
                crate::cli::format::pretty_lambda(&self.num),
                crate::cli::format::pretty_lambda(&self.den)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::Coeff;

    fn pl(c: &[i64]) -> PolyLambda {
        Poly::new(c.iter().map(|&i| Rational::from_integer(i.into())).collect())
    }

    #[test]
    fn cancels_common_factor() {
        let r = RatFun::normalize(pl(&[-1, 0, 1]), pl(&[-1, 1])).unwrap();
        assert_eq!(r, RatFun::from_poly(pl(&[1, 1])));
        let r = RatFun::normalize(pl(&[1, 1]) * pl(&[2, 1]), pl(&[1, 1])).unwrap();
        assert_eq!(r.as_poly(), Some(&pl(&[2, 1])));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let r = RatFun::normalize(PolyLambda::zero(), pl(&[3, 1])).unwrap();
        assert!(r.numer().is_zero());
        assert_eq!(r.denom(), &PolyLambda::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        let err = RatFun::normalize(pl(&[1]), PolyLambda::zero()).unwrap_err();
        assert_eq!(err.to_string(), "division by zero polynomial");
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFun::normalize(pl(&[1]), pl(&[4, 2])).unwrap();
        assert_eq!(r.denom(), &pl(&[2, 1]));
        assert_eq!(r.numer(), &PolyLambda::from_rational(&crate::exactcore::rat(1, 2)));
    }

    #[test]
    fn field_ops() {
        let a = RatFun::normalize(pl(&[1]), pl(&[0, 1])).unwrap();
        let b = RatFun::normalize(pl(&[1]), pl(&[1, 1])).unwrap();
        // 1/λ - 1/(λ+1) = 1/(λ(λ+1))
        let d = a.clone() - b.clone();
        assert_eq!(d, RatFun::normalize(pl(&[1]), pl(&[0, 1, 1])).unwrap());
        assert_eq!((a.clone() / a.clone()).unwrap(), RatFun::from_poly(PolyLambda::one()));
        assert_eq!(a.clone() * b.recip().unwrap(), RatFun::normalize(pl(&[1, 1]), pl(&[0, 1])).unwrap());
    }
}
