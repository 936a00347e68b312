//! Text renderings of exact values: `num/den` strings, the CSV polynomial
//! form `c0 + c1*l + c2*l^2`, and human-readable output.

use num_traits::{One, Signed, Zero};

use crate::{PolyLambda, PolyXOverLambda, Rational};

/// `num/den`, always with an explicit denominator.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
        None => (s.parse().ok()?, num_bigint::BigInt::one()),
    };
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Ascending λ-coefficients as `num/den` strings; empty for zero.
pub fn lambda_coeffs(p: &PolyLambda) -> Vec<String> {
    p.coeffs().iter().map(rational).collect()
}

/// `c0 + c1*l + c2*l^2`, listing every power up to the degree.
pub fn csv_lambda(p: &PolyLambda) -> String {
    if p.is_zero() {
        return "0/1".to_string();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| match i {
            0 => rational(c),
            1 => format!("{}*l", rational(c)),
            _ => format!("{}*l^{}", rational(c), i),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `(λ-poly) + (λ-poly)*x + (λ-poly)*x^2`.
pub fn csv_x(p: &PolyXOverLambda) -> String {
    if p.is_zero() {
        return "0/1".to_string();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| match i {
            0 => format!("({})", csv_lambda(c)),
            1 => format!("({})*x", csv_lambda(c)),
            _ => format!("({})*x^{}", csv_lambda(c), i),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn pretty_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Human-readable polynomial in `var`, descending powers omitted when zero.
fn pretty_poly(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match (i, mag.is_one()) {
            (0, _) => pretty_rational(&mag),
            (1, true) => var.to_string(),
            (1, false) => format!("{}*{}", pretty_rational(&mag), var),
            (_, true) => format!("{var}^{i}"),
            (_, false) => format!("{}*{}^{}", pretty_rational(&mag), var, i),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn pretty_lambda(p: &PolyLambda) -> String {
    pretty_poly(p.coeffs(), "λ")
}

pub fn pretty_x(p: &PolyXOverLambda) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => format!("({})", pretty_lambda(c)),
            1 => format!("({})*x", pretty_lambda(c)),
            _ => format!("({})*x^{}", pretty_lambda(c), i),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;
    use crate::Poly;

    #[test]
    fn renderings() {
        let p = Poly::new(vec![rat(1, 6), rat(0, 1), rat(-1, 6)]);
        assert_eq!(csv_lambda(&p), "1/6 + 0/1*l + -1/6*l^2");
        assert_eq!(pretty_lambda(&p), "1/6 - 1/6*λ^2");
        assert_eq!(lambda_coeffs(&p), vec!["1/6", "0/1", "-1/6"]);
        assert_eq!(csv_lambda(&PolyLambda::zero()), "0/1");
        assert_eq!(pretty_lambda(&Poly::new(vec![rat(-1, 1), rat(1, 1)])), "-1 + λ");
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_rational("0/1"), Some(rat(0, 1)));
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("5"), Some(rat(5, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("a/b"), None);
    }
}
