use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Poly;

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A commutative ℚ-algebra usable as a polynomial or series coefficient.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: &Rational) -> Self;

    fn scale(&self, r: &Rational) -> Self;

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_int(i: i64) -> Self {
        Self::from_rational(&Rational::from_integer(i.into()))
    }

    /// Cauchy product of two nonempty coefficient slices.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = std::mem::replace(&mut out[i + j], Self::zero()) + x.clone() * y.clone();
                }
            }
        }
        out
    }
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    /// Integer convolution over a common denominator, reduced once per coefficient.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let (ia, da) = integerize(a);
        let (ib, db) = integerize(b);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in ia.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in ib.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        out.into_iter().map(|c| Rational::new(c, den.clone())).collect()
    }
}

/// Numerators over the least common denominator.
fn integerize(a: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let nums = a.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

/// Rings that contain ℚ[λ], so that λ-dependent constants can be embedded.
pub trait LambdaRing: Coeff {
    fn from_poly_lambda(p: &Poly<Rational>) -> Self;

    fn lambda() -> Self {
        Self::from_poly_lambda(&super::poly::lambda())
    }
}

impl LambdaRing for Poly<Rational> {
    fn from_poly_lambda(p: &Poly<Rational>) -> Self {
        p.clone()
    }
}

impl<R: LambdaRing> LambdaRing for Poly<R> {
    fn from_poly_lambda(p: &Poly<Rational>) -> Self {
        Poly::constant(R::from_poly_lambda(p))
    }
}
