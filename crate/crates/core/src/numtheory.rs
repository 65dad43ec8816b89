//! Euler's totient function.

use crate::error::{Error, Result};

/// `φ(n)` by trial-division factorization.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "totient is defined for n >= 1".into(),
        ));
    }
    let mut rest = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    Ok(result)
}

/// `φ(1..=N)` computed together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotientTable {
    /// `values[n - 1] = φ(n)`.
    values: Vec<u64>,
}

impl TotientTable {
    /// Eratosthenes-style sieve: for each prime `p`, multiply every multiple
    /// of `p` by `(1 - 1/p)`.
    pub fn sieve(limit: usize) -> Result<TotientTable> {
        if limit == 0 {
            return Err(Error::InvalidArgument("sieve limit must be >= 1".into()));
        }
        let mut phi: Vec<u64> = (0..=limit as u64).collect();
        for p in 2..=limit {
            if phi[p] == p as u64 {
                for multiple in (p..=limit).step_by(p) {
                    phi[multiple] -= phi[multiple] / p as u64;
                }
            }
        }
        phi.remove(0);
        Ok(TotientTable { values: phi })
    }

    pub fn limit(&self) -> usize {
        self.values.len()
    }

    /// `φ(n)` for `1 <= n <= limit`.
    pub fn get(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Shorthand for [`TotientTable::sieve`].
pub fn totient_sieve(limit: usize) -> Result<TotientTable> {
    TotientTable::sieve(limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn brute(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn single_values() {
        assert_eq!(totient(1), Ok(1));
        assert_eq!(totient(6), Ok(2));
        assert_eq!(totient(10), Ok(brute(10)));
        assert_eq!(totient(10), Ok(4));
        assert_eq!(totient(97), Ok(96));
        assert!(matches!(totient(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn sieve_values() {
        assert_eq!(totient_sieve(3).unwrap().values(), &[1, 1, 2]);
        assert_eq!(totient_sieve(1).unwrap().values(), &[1]);
        let t = totient_sieve(12).unwrap();
        assert_eq!(t.get(12), Some(brute(12)));
        assert_eq!(t.get(12), Some(4));
        assert_eq!(t.get(0), None);
        assert_eq!(t.get(13), None);
        assert!(totient_sieve(0).is_err());
    }

    #[test]
    fn divisor_sum_and_agreement() {
        let n_max = 10_000;
        let table = totient_sieve(n_max).unwrap();
        let mut divisor_sums = vec![0u64; n_max + 1];
        for d in 1..=n_max {
            for m in (d..=n_max).step_by(d) {
                divisor_sums[m] += table.get(d).unwrap();
            }
        }
        for (n, &sum) in divisor_sums.iter().enumerate().skip(1) {
            assert_eq!(sum, n as u64);
            assert_eq!(table.get(n).unwrap(), totient(n as u64).unwrap());
        }
    }
}
