//! λ-factorials, degenerate Stirling triangles, degenerate Stirling
//! polynomials, degenerate r-Stirling numbers, Eulerian numbers and the
//! forward difference operator.
//!
//! The normative route for `S_{1,λ}` and `S_{2,λ}` is an exact change of
//! basis in ℚ[λ][x] between `{(x)_n}` and `{(x)_{n,λ}}`. Both bases are
//! monic with degree `n`, so the change-of-basis matrix is unitriangular
//! and back-substitution is exact.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactcore::{binomial, binomial_int, Coeff, LambdaRing};
use crate::{lambda, Error, PolyLambda, PolyXOverLambda, Result};

/// `x(x - s)(x - 2s)⋯(x - (n-1)s)`.
pub fn falling_factorial<R: Coeff>(x: &R, step: &R, n: usize) -> R {
    (0..n).fold(R::one(), |acc, i| {
        acc * (x.clone() - step.clone() * R::from_int(i as i64))
    })
}

/// `x(x + s)(x + 2s)⋯(x + (n-1)s)`.
pub fn rising_factorial<R: Coeff>(x: &R, step: &R, n: usize) -> R {
    (0..n).fold(R::one(), |acc, i| {
        acc * (x.clone() + step.clone() * R::from_int(i as i64))
    })
}

/// `(x)_{n,λ}`.
pub fn falling_lambda<R: LambdaRing>(x: &R, n: usize) -> R {
    falling_factorial(x, &R::lambda(), n)
}

/// `⟨x⟩_{n,λ}`.
pub fn rising_lambda<R: LambdaRing>(x: &R, n: usize) -> R {
    rising_factorial(x, &R::lambda(), n)
}

/// Classical Pochhammer symbol `⟨a⟩_k = a(a+1)⋯(a+k-1)`.
pub fn pochhammer<R: Coeff>(a: &R, k: usize) -> R {
    rising_factorial(a, &R::one(), k)
}

/// `(x)_{n,λ}` with `x` the indeterminate of ℚ[λ][x].
pub fn falling_lambda_symbolic(n: usize) -> PolyXOverLambda {
    falling_lambda(&PolyXOverLambda::var(), n)
}

/// Classical falling factorial `(x)_n` in ℚ[λ][x].
pub fn falling_symbolic(n: usize) -> PolyXOverLambda {
    falling_factorial(&PolyXOverLambda::var(), &PolyXOverLambda::one(), n)
}

/// `λ^k (1)_{k+1,1/λ} = (λ-1)(λ-2)⋯(λ-k)`, the polynomial form that keeps
/// `1/λ` out of the data model.
pub fn falling_lambda_minus_one(k: usize) -> PolyLambda {
    falling_factorial(&(lambda() - PolyLambda::one()), &PolyLambda::one(), k)
}

/// `λ^{j-1}⟨1⟩_{j,1/λ} = (λ+1)(λ+2)⋯(λ+j-1)`.
pub fn rising_lambda_plus_one(j: usize) -> PolyLambda {
    if j == 0 {
        return PolyLambda::one();
    }
    rising_factorial(&(lambda() + PolyLambda::one()), &PolyLambda::one(), j - 1)
}

/// Coordinates of `target` in a monic, degree-graded basis `basis[0..]`.
fn change_of_basis(target: &PolyXOverLambda, basis: &[PolyXOverLambda]) -> Vec<PolyLambda> {
    let n = target.degree().unwrap_or(0);
    let mut rem = target.clone();
    let mut out = vec![PolyLambda::zero(); n + 1];
    for j in (0..=n).rev() {
        let c = rem.coeff(j);
        if !c.is_zero() {
            rem = rem - basis[j].scale_by(&c);
            out[j] = c;
        }
    }
    debug_assert!(rem.is_zero());
    out
}

fn check_indices(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

/// Row `n` of `S_{1,λ}`: `(x)_n = Σ_l S_{1,λ}(n,l)(x)_{l,λ}`.
pub fn stirling1_row(n: usize) -> Vec<PolyLambda> {
    let basis: Vec<_> = (0..=n).map(falling_lambda_symbolic).collect();
    change_of_basis(&falling_symbolic(n), &basis)
}

/// Row `n` of `S_{2,λ}`: `(x)_{n,λ} = Σ_k S_{2,λ}(n,k)(x)_k`.
pub fn stirling2_row(n: usize) -> Vec<PolyLambda> {
    let basis: Vec<_> = (0..=n).map(falling_symbolic).collect();
    change_of_basis(&falling_lambda_symbolic(n), &basis)
}

pub fn stirling1_deg(n: usize, k: usize) -> Result<PolyLambda> {
    check_indices(n, k)?;
    Ok(stirling1_row(n).swap_remove(k))
}

pub fn stirling2_deg(n: usize, k: usize) -> Result<PolyLambda> {
    check_indices(n, k)?;
    Ok(stirling2_row(n).swap_remove(k))
}

/// `S_{2,λ}(n,k|x) = Σ_{l=k}^{n} C(n,l) S_{2,λ}(l,k) (x)_{n-l,λ}`.
pub fn stirling2_deg_poly(n: usize, k: usize) -> Result<PolyXOverLambda> {
    Tables::new(n).stirling2_poly(n, k)
}

/// `{n+r brace k+r}_{r,λ}`, obtained as `S_{2,λ}(n,k|r)`.
pub fn r_stirling2_deg(n: usize, k: usize, r: usize) -> Result<PolyLambda> {
    if r == 0 {
        return Err(Error::ParameterOutOfRange("r must be at least 1".into()));
    }
    Tables::new(n).r_stirling2(n, k, r)
}

/// Classical Eulerian number `Σ_{j=0}^{k+1} (-1)^j C(n+1,j)(k-j+1)^n`.
///
/// The upper limit `k+1` is kept as written. Its term has base zero and
/// vanishes; it is skipped rather than evaluated, since `0^0` at `n = 0`
/// would otherwise break `⟨0 0⟩ = 1`.
pub fn eulerian_classical(n: usize, k: usize) -> Result<BigInt> {
    check_indices(n, k)?;
    let mut acc = BigInt::zero();
    for j in 0..=k + 1 {
        let base = k + 1 - j;
        if base == 0 {
            continue;
        }
        let term = binomial_int(n + 1, j) * num_traits::pow(BigInt::from(base), n);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `⟨n m⟩_λ = (-1)^{n-m} Σ_{k=0}^{n-m} (λ-1)⋯(λ-k) C(n-k,m) S_{2,λ}(n,k)`.
pub fn eulerian_degenerate(n: usize, m: usize) -> Result<PolyLambda> {
    Tables::new(n).eulerian_degenerate(n, m)
}

/// `Δ^k f(x) = Σ_j C(k,j)(-1)^{k-j} f(x+j)` from `values = [f(x), f(x+1), …]`.
pub fn forward_difference<R: Coeff>(values: &[R], k: usize) -> Result<R> {
    if values.len() < k + 1 {
        return Err(Error::InsufficientValues { needed: k + 1, got: values.len() });
    }
    let mut acc = R::zero();
    for (j, v) in values.iter().take(k + 1).enumerate() {
        let c = binomial(k, j);
        let c = if (k - j).is_multiple_of(2) { c } else { -c };
        acc = acc + v.scale(&c);
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Stirling1,
    Stirling2,
    Stirling2Poly,
    RStirling2 { r: usize },
    EulerianClassical,
    EulerianDegenerate,
}

/// Lower-triangular table with entries for `0 ≤ k ≤ n ≤ max_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleTable<R> {
    family: Family,
    rows: Vec<Vec<R>>,
}

impl<R: Clone> TriangleTable<R> {
    pub fn from_rows(family: Family, rows: Vec<Vec<R>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have n + 1 entries");
        }
        TriangleTable { family, rows }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `None` for an empty table.
    pub fn max_n(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&R> {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .ok_or_else(|| Error::IndexOutOfRange(format!("({n}, {k}) outside table")))
    }

    pub fn row(&self, n: usize) -> Option<&[R]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// Copy of the table with one entry replaced.
    pub fn with_entry(&self, n: usize, k: usize, value: R) -> Result<Self> {
        self.get(n, k)?;
        let mut out = self.clone();
        out.rows[n][k] = value;
        Ok(out)
    }
}

impl TriangleTable<PolyLambda> {
    pub fn stirling1(max_n: usize) -> Self {
        TriangleTable::from_rows(Family::Stirling1, (0..=max_n).map(stirling1_row).collect())
    }

    pub fn stirling2(max_n: usize) -> Self {
        TriangleTable::from_rows(Family::Stirling2, (0..=max_n).map(stirling2_row).collect())
    }
}

impl TriangleTable<BigInt> {
    pub fn eulerian_classical(max_n: usize) -> Self {
        let rows = (0..=max_n)
            .map(|n| (0..=n).map(|k| eulerian_classical(n, k).expect("k ≤ n")).collect())
            .collect();
        TriangleTable::from_rows(Family::EulerianClassical, rows)
    }
}

/// Shared triangles for one `max_n`. The second-kind triangle is fixed at
/// construction; tables derived from it are filled once on first use and
/// never change afterwards.
#[derive(Debug)]
pub struct Tables {
    max_n: usize,
    s2: TriangleTable<PolyLambda>,
    s1: OnceLock<TriangleTable<PolyLambda>>,
    s2_poly: OnceLock<TriangleTable<PolyXOverLambda>>,
    eulerian: OnceLock<TriangleTable<PolyLambda>>,
}

impl Tables {
    pub fn new(max_n: usize) -> Self {
        Tables::from_stirling2(TriangleTable::stirling2(max_n))
    }

    /// Build on a given `S_{2,λ}` table; every derived family uses it.
    pub fn from_stirling2(s2: TriangleTable<PolyLambda>) -> Self {
        Tables {
            max_n: s2.max_n().expect("nonempty table"),
            s2,
            s1: OnceLock::new(),
            s2_poly: OnceLock::new(),
            eulerian: OnceLock::new(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check(&self, n: usize, k: usize) -> Result<()> {
        check_indices(n, k)?;
        if n > self.max_n {
            return Err(Error::IndexOutOfRange(format!(
                "n = {n} exceeds table size {}",
                self.max_n
            )));
        }
        Ok(())
    }

    pub fn stirling2_table(&self) -> &TriangleTable<PolyLambda> {
        &self.s2
    }

    pub fn stirling1_table(&self) -> &TriangleTable<PolyLambda> {
        self.s1.get_or_init(|| TriangleTable::stirling1(self.max_n))
    }

    pub fn stirling2_poly_table(&self) -> &TriangleTable<PolyXOverLambda> {
        self.s2_poly.get_or_init(|| {
            let falling: Vec<_> = (0..=self.max_n).map(falling_lambda_symbolic).collect();
            let rows = (0..=self.max_n)
                .map(|n| {
                    (0..=n)
                        .map(|k| {
                            (k..=n).fold(PolyXOverLambda::zero(), |acc, l| {
                                let s = self.s2.get(l, k).expect("in range").scale(&binomial(n, l));
                                acc + falling[n - l].scale_by(&s)
                            })
                        })
                        .collect()
                })
                .collect();
            TriangleTable::from_rows(Family::Stirling2Poly, rows)
        })
    }

    pub fn eulerian_table(&self) -> &TriangleTable<PolyLambda> {
        self.eulerian.get_or_init(|| {
            let weights: Vec<_> = (0..=self.max_n).map(falling_lambda_minus_one).collect();
            let rows = (0..=self.max_n)
                .map(|n| {
                    (0..=n)
                        .map(|m| {
                            let sum = (0..=n - m).fold(PolyLambda::zero(), |acc, k| {
                                let s = self.s2.get(n, k).expect("in range");
                                acc + (weights[k].clone() * s.clone()).scale(&binomial(n - k, m))
                            });
                            if (n - m) % 2 == 0 {
                                sum
                            } else {
                                -sum
                            }
                        })
                        .collect()
                })
                .collect();
            TriangleTable::from_rows(Family::EulerianDegenerate, rows)
        })
    }

    pub fn stirling1(&self, n: usize, k: usize) -> Result<PolyLambda> {
        self.check(n, k)?;
        self.stirling1_table().get(n, k).cloned()
    }

    pub fn stirling2(&self, n: usize, k: usize) -> Result<PolyLambda> {
        self.check(n, k)?;
        self.s2.get(n, k).cloned()
    }

    pub fn stirling2_poly(&self, n: usize, k: usize) -> Result<PolyXOverLambda> {
        self.check(n, k)?;
        self.stirling2_poly_table().get(n, k).cloned()
    }

    pub fn r_stirling2(&self, n: usize, k: usize, r: usize) -> Result<PolyLambda> {
        let p = self.stirling2_poly(n, k)?;
        Ok(p.eval(&PolyLambda::from_int(r as i64)))
    }

    pub fn eulerian_degenerate(&self, n: usize, m: usize) -> Result<PolyLambda> {
        self.check(n, m)?;
        self.eulerian_table().get(n, m).cloned()
    }

    pub fn r_stirling2_table(&self, r: usize) -> TriangleTable<PolyLambda> {
        let rows = (0..=self.max_n)
            .map(|n| (0..=n).map(|k| self.r_stirling2(n, k, r).expect("in range")).collect())
            .collect();
        TriangleTable::from_rows(Family::RStirling2 { r }, rows)
    }
}
