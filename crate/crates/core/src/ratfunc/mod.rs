//! Exact rational polynomials, rational functions, the generating functions
//! `Σ_L s(L,h) X^L` and `Σ_L p(L,h) X^L`, and their asymptotic profiles.
//!
//! Rational functions are compared by cross-multiplication and never reduced,
//! so no polynomial gcd is required.

mod asymptotic;
mod function;
mod genfunc;
mod polynomial;

pub use asymptotic::{asymptotic_profile, leading_coefficients, AsymptoticProfile};
pub use function::RationalFunction;
pub use genfunc::{
    balanced_generating_function, generating_function, palindromic_generating_function,
    GeneratingFunction,
};
pub use polynomial::Polynomial;

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
