//! Classical (λ = 0) reference values from recurrences and enumeration,
//! independent of the change-of-basis and Eulerian-sum code paths.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactcore::binomial;
use crate::Rational;

/// Signed Stirling numbers of the first kind, rows `0..=max_n`:
/// `s(n+1,k) = s(n,k-1) - n·s(n,k)`.
pub fn stirling1_signed(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
                let here = prev.get(k).cloned().unwrap_or_default();
                left - BigInt::from(n) * here
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Stirling numbers of the second kind: `S(n+1,k) = S(n,k-1) + k·S(n,k)`.
pub fn stirling2(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
                let here = prev.get(k).cloned().unwrap_or_default();
                left + BigInt::from(k) * here
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Number of set partitions of `{1..n}` into `k` blocks, by enumerating
/// restricted growth strings.
pub fn count_set_partitions(n: usize, k: usize) -> u64 {
    fn go(pos: usize, n: usize, blocks: usize, k: usize) -> u64 {
        if pos == n {
            return u64::from(blocks == k);
        }
        if blocks + (n - pos) < k {
            return 0;
        }
        let mut total = 0;
        for b in 0..=blocks {
            let next = if b == blocks { blocks + 1 } else { blocks };
            if next <= k {
                total += go(pos + 1, n, next, k);
            }
        }
        total
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    go(0, n, 0, k)
}

/// Eulerian numbers: `A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)`.
pub fn eulerian(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let a = prev.get(k).cloned().unwrap_or_default() * BigInt::from(k + 1);
                let b = if k >= 1 {
                    prev.get(k - 1).cloned().unwrap_or_default() * BigInt::from(n - k)
                } else {
                    BigInt::zero()
                };
                a + b
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Permutations of `{0..n}` with exactly `k` ascents, by enumeration.
pub fn count_ascents(n: usize, k: usize) -> u64 {
    fn permute(items: &mut Vec<usize>, len: usize, k: usize, count: &mut u64) {
        if len == items.len() {
            let ascents = items.windows(2).filter(|w| w[0] < w[1]).count();
            if ascents == k {
                *count += 1;
            }
            return;
        }
        for i in len..items.len() {
            items.swap(len, i);
            permute(items, len + 1, k, count);
            items.swap(len, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut items, 0, k, &mut count);
    count
}

/// Bernoulli numbers with `B_1 = -1/2` from `Σ_{k=0}^{n} C(n+1,k) B_k = 0`.
pub fn bernoulli(max_n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for n in 1..=max_n {
        let s: Rational = (0..n).map(|k| binomial(n + 1, k) * &b[k]).sum();
        b.push(-s / binomial(n + 1, n));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    #[test]
    fn recurrences_match_enumeration() {
        let s2 = stirling2(8);
        let eu = eulerian(7);
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(s2[n][k], BigInt::from(count_set_partitions(n, k)));
            }
        }
        for n in 1..=7 {
            for k in 0..n {
                assert_eq!(eu[n][k], BigInt::from(count_ascents(n, k)));
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(stirling2(4)[4][2], 7.into());
        assert_eq!(stirling1_signed(4)[4][2], 11.into());
        assert_eq!(stirling1_signed(3)[3][1], 2.into());
        let b = bernoulli(12);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[12], rat(-691, 2730));
        assert!(b[11].is_zero());
    }
}
