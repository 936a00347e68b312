//! Exact arithmetic foundation: rationals, polynomials over any coefficient
//! ring, and normalized rational functions in λ.

mod coeff;
mod poly;
mod ratfun;

pub use coeff::{Coeff, LambdaRing, Rational};
pub use poly::{lambda, Poly};
pub use ratfun::RatFun;

/// Binomial coefficient `C(n, k)` as an exact rational; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

pub fn binomial_int(n: usize, k: usize) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> num_bigint::BigInt {
    (1..=n).fold(num_bigint::BigInt::from(1), |acc, i| acc * i)
}

/// Shorthand for the rational `num/den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial_int(5, 2), 10.into());
        assert_eq!(binomial_int(3, 5), 0.into());
        assert_eq!(binomial_int(32, 16), 601080390u64.into());
        assert_eq!(factorial(0), 1.into());
        assert_eq!(factorial(6), 720.into());
    }
}
