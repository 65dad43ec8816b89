use num_traits::Zero;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Quotient of two polynomials, not necessarily in lowest terms.
///
/// Equality is by cross-multiplication: `a/b == c/d` iff `a·d == c·b`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// The first `n + 1` Taylor coefficients at `X = 0`.
    ///
    /// Uses `c_k = (num_k - Σ_{j=1..k} den_j c_{k-j}) / den_0`.
    pub fn series_coefficients(&self, n: usize) -> Result<Vec<Rational>> {
        let lead = self.den.coeff(0);
        if lead.is_zero() {
            return Err(Error::SeriesUndefined);
        }
        let den = self.den.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for (j, d) in den.iter().enumerate().take(k + 1).skip(1) {
                if !d.is_zero() {
                    acc -= d * &out[k - j];
                }
            }
            out.push(acc / &lead);
        }
        Ok(out)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}
