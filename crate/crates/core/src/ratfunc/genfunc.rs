//! Generating functions of the counts at fixed height.
//!
//! For `h >= 2` the balanced-word generating function is
//!
//! ```text
//!            (1-X^{h-1}) (V_{2h} - X^h V_h - X^{h+1} V_{h-1} - X^{2h-1}) + (1+X) B_h
//! S_h(X) = --------------------------------------------------------------------------
//!                           (1-X^{h-1}) (1-X^h) (1-X^{h+1})
//! ```
//!
//! with `V_n = Σ_{L<n} s(L,h) X^L` and `B_h = Σ_{r=0}^{h-2} s(h-1,r) X^{r+2h-1}`.
//! The palindromic one is
//!
//! ```text
//!          (1-X^{h-1}) Σ_{L<h} p(L,h) X^L + X^h Σ_{r=0}^{h-2} p(h-1,r) X^r
//! P_h(X) = ------------------------------------------------------------------
//!                              (1-X^{h-1}) (1-X^{h+1})
//! ```
//!
//! Numerators are built from exact counts supplied by a [`Counter`].

use num_traits::One;

use super::{Polynomial, Rational, RationalFunction};
use crate::counting::{Counter, Family};
use crate::error::{Error, Result};

/// A numerator over a product of factors `(1 - X^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingFunction {
    family: Family,
    height: usize,
    numerator: Polynomial,
    /// Exponents `k` of the denominator factors `(1 - X^k)`, in order.
    factors: Vec<usize>,
}

impl GeneratingFunction {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn factor_exponents(&self) -> &[usize] {
        &self.factors
    }

    /// Factors rendered as `"(1-X^k)"`.
    pub fn factor_strings(&self) -> Vec<String> {
        self.factors.iter().map(|k| format!("(1-X^{k})")).collect()
    }

    /// Expanded product of the denominator factors.
    pub fn denominator(&self) -> Polynomial {
        self.factors.iter().fold(Polynomial::one(), |acc, &k| {
            &acc * &Polynomial::one_minus_x_pow(k)
        })
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::new(self.numerator.clone(), self.denominator())
            .expect("product of (1 - X^k) factors is nonzero")
    }

    /// Coefficients of `X^0 ..= X^n`.
    pub fn series(&self, n: usize) -> Vec<Rational> {
        self.to_rational_function()
            .series_coefficients(n)
            .expect("(1 - X^k) factors are 1 at X = 0")
    }
}

pub fn generating_function(
    counter: &mut Counter,
    family: Family,
    height: usize,
) -> Result<GeneratingFunction> {
    match family {
        Family::Balanced => balanced_generating_function(counter, height),
        Family::Palindromic => palindromic_generating_function(counter, height),
    }
}

/// `Σ_{L < n} count(L, h) X^L`.
fn initial_segment(counter: &mut Counter, family: Family, height: i64, n: usize) -> Polynomial {
    Polynomial::from_coeffs(
        (0..n as i64)
            .map(|len| {
                Rational::from_integer(counter.count(family, len, height).into_biguint().into())
            })
            .collect(),
    )
}

/// `Σ_{r=0}^{h-2} count(h-1, r) X^r`.
fn last_row_head(counter: &mut Counter, family: Family, height: i64) -> Polynomial {
    Polynomial::from_coeffs(
        (0..=height - 2)
            .map(|r| {
                Rational::from_integer(counter.count(family, height - 1, r).into_biguint().into())
            })
            .collect(),
    )
}

fn x_pow(k: usize) -> Polynomial {
    Polynomial::monomial(Rational::one(), k)
}

pub fn balanced_generating_function(
    counter: &mut Counter,
    height: usize,
) -> Result<GeneratingFunction> {
    let (numerator, factors) = match height {
        0 => (Polynomial::one(), vec![1]),
        // s(L, 1) = L
        1 => (x_pow(1), vec![1, 1]),
        _ => {
            let h = height as i64;
            let v_2h = initial_segment(counter, Family::Balanced, h, 2 * height);
            let v_h = initial_segment(counter, Family::Balanced, h, height);
            let v_h_minus = initial_segment(counter, Family::Balanced, h, height - 1);
            let b_h = last_row_head(counter, Family::Balanced, h).shift(2 * height - 1);

            let bracket = &(&(&v_2h - &v_h.shift(height)) - &v_h_minus.shift(height + 1))
                - &x_pow(2 * height - 1);
            let numerator = &(&Polynomial::one_minus_x_pow(height - 1) * &bracket)
                + &(&Polynomial::from_integers(&[1, 1]) * &b_h);
            (numerator, vec![height - 1, height, height + 1])
        }
    };
    if height >= 2 {
        check_degree(&numerator, 3 * height - 2, "S", height)?;
    }
    Ok(GeneratingFunction {
        family: Family::Balanced,
        height,
        numerator,
        factors,
    })
}

pub fn palindromic_generating_function(
    counter: &mut Counter,
    height: usize,
) -> Result<GeneratingFunction> {
    let (numerator, factors) = match height {
        0 => (Polynomial::one(), vec![1]),
        1 => (x_pow(1), vec![2]),
        _ => {
            let h = height as i64;
            let head = initial_segment(counter, Family::Palindromic, h, height);
            let row = last_row_head(counter, Family::Palindromic, h);
            let numerator =
                &(&Polynomial::one_minus_x_pow(height - 1) * &head) + &row.shift(height);
            (numerator, vec![height - 1, height + 1])
        }
    };
    if height >= 2 {
        check_degree(&numerator, 2 * height - 2, "P", height)?;
    }
    Ok(GeneratingFunction {
        family: Family::Palindromic,
        height,
        numerator,
        factors,
    })
}

fn check_degree(numerator: &Polynomial, bound: usize, name: &str, height: usize) -> Result<()> {
    match numerator.degree() {
        Some(d) if d > bound => Err(Error::Inconsistency(format!(
            "numerator of {name}_{height} has degree {d} > {bound}"
        ))),
        _ => Ok(()),
    }
}
