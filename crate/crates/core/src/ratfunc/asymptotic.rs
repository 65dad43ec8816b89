//! Exact asymptotic profiles at fixed height.
//!
//! For `h >= 2`, `s(L, h) = α L² + β L + r(L mod T)` with `T = lcm(h-1, h, h+1)`,
//! and `p(L, h) = α L + r(L mod T)` for even `h`,
//! `p(L, h) = α (1 - (-1)^L) L + r(L mod T)` for odd `h`.
//! The leading coefficients come from closed totient sums. The periodic part
//! `r` is tabulated from exact counts and then checked for periodicity, since
//! splitting it further into per-modulus sequences is not unique.

use num_integer::Integer;
use num_traits::Zero;

use super::{ratio, rational, Rational};
use crate::counting::{Counter, Family};
use crate::error::{Error, Result};
use crate::numtheory::TotientTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticProfile {
    pub family: Family,
    pub height: u64,
    pub alpha: Rational,
    /// Always zero for palindromes.
    pub beta: Rational,
    /// Odd-height palindromes: the linear term only appears at odd lengths.
    pub parity_form: bool,
    pub period: usize,
    /// `residual[r]` is the exact remainder for every `L ≡ r (mod period)`.
    pub residual: Vec<Rational>,
}

impl AsymptoticProfile {
    /// The non-periodic part at length `len`.
    pub fn polynomial_part(&self, len: u64) -> Rational {
        polynomial_part(self.family, self.parity_form, &self.alpha, &self.beta, len)
    }

    /// Polynomial part plus periodic residual; equals the exact count.
    pub fn reconstruct(&self, len: u64) -> Rational {
        self.polynomial_part(len) + &self.residual[(len % self.period as u64) as usize]
    }
}

fn polynomial_part(
    family: Family,
    parity_form: bool,
    alpha: &Rational,
    beta: &Rational,
    len: u64,
) -> Rational {
    let l = rational(len as i64);
    match family {
        Family::Balanced => alpha * &l * &l + beta * &l,
        Family::Palindromic if parity_form => {
            // 1 - (-1)^L is 0 for even L and 2 for odd L
            if len % 2 == 1 {
                alpha * rational(2) * l
            } else {
                Rational::zero()
            }
        }
        Family::Palindromic => alpha * l,
    }
}

/// Leading coefficients `(α, β)` from totient sums.
///
/// Balanced: `α = Σ_{i=1}^{h-1} (h-i) φ(i) / (h(h²-1))` and
/// `β = Σ_{i=1}^{h} φ(i) / (h(h+1))`.
/// Palindromic: `α = Σ_{i=1}^{ceil((h-1)/2)} φ(h+1-2i) / (h²-1)`, `β = 0`.
pub fn leading_coefficients(family: Family, height: u64) -> Result<(Rational, Rational)> {
    if height < 2 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic profile needs h >= 2, got {height}"
        )));
    }
    let h = height as i64;
    let phi = TotientTable::sieve(height as usize)?;
    let phi = |i: i64| phi.get(i as usize).expect("index within sieve") as i64;
    Ok(match family {
        Family::Balanced => {
            let a: i64 = (1..h).map(|i| (h - i) * phi(i)).sum();
            let b: i64 = (1..=h).map(phi).sum();
            (ratio(a, h * (h * h - 1)), ratio(b, h * (h + 1)))
        }
        Family::Palindromic => {
            let a: i64 = (1..=h / 2).map(|i| phi(h + 1 - 2 * i)).sum();
            (ratio(a, h * h - 1), Rational::zero())
        }
    })
}

/// Builds the profile and checks that the residual repeats over three
/// periods; a mismatch is reported as [`Error::Inconsistency`].
pub fn asymptotic_profile(
    counter: &mut Counter,
    family: Family,
    height: i64,
) -> Result<AsymptoticProfile> {
    if height < 2 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic profile needs h >= 2, got {height}"
        )));
    }
    let h = height as u64;
    let (alpha, beta) = leading_coefficients(family, h)?;
    let parity_form = family == Family::Palindromic && h % 2 == 1;
    let hu = h as usize;
    let period = match family {
        Family::Balanced => (hu - 1).lcm(&hu).lcm(&(hu + 1)),
        Family::Palindromic => {
            let base = (hu - 1).lcm(&(hu + 1));
            if parity_form {
                2 * base
            } else {
                base
            }
        }
    };

    let remainder = |counter: &mut Counter, len: u64| -> Rational {
        let count = counter.count(family, len as i64, height).into_biguint();
        Rational::from_integer(count.into())
            - polynomial_part(family, parity_form, &alpha, &beta, len)
    };

    let residual: Vec<Rational> = (0..period as u64)
        .map(|len| remainder(counter, len))
        .collect();
    for len in period as u64..3 * period as u64 {
        let r = remainder(counter, len);
        let expected = &residual[(len % period as u64) as usize];
        if &r != expected {
            return Err(Error::Inconsistency(format!(
                "residual of {family}(L,{h}) is not {period}-periodic at L={len}: {r} vs {expected}"
            )));
        }
    }

    Ok(AsymptoticProfile {
        family,
        height: h,
        alpha,
        beta,
        parity_form,
        period,
        residual,
    })
}
