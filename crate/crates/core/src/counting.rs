//! Exact counts of balanced words and balanced palindromes.
//!
//! `s(L, h)` is the number of balanced words of length `L` and height `h`,
//! and `p(L, h)` the number of balanced palindromes. Both are extended to all
//! of `Z²`: zero for `L < 0` or `L = 0, h != 0`, one for `L = h = 0`, and
//! `#S(L, h mod L)` otherwise (mathematical modulus, so negative heights wrap
//! into `[0, L)`).
//!
//! A [`Counter`] owns the memo tables of both recurrences. Evaluation uses an
//! explicit work stack, so recursion depth is not bounded by the call stack
//! (`s(100000, 50)` chains about two thousand levels deep).

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::TotientTable;
use crate::words::Symbol;

/// Exact nonnegative count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Count {
        Count(BigUint::zero())
    }

    pub fn one() -> Count {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Count {
        Count(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Count {
        Count(v)
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;

    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Which counting function: all balanced words (`s`) or balanced
/// palindromes (`p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Balanced,
    Palindromic,
}

impl Family {
    /// Short tag used on the command line and in output.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Balanced => "s",
            Family::Palindromic => "p",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "s" => Ok(Family::Balanced),
            "p" => Ok(Family::Palindromic),
            other => Err(Error::InvalidArgument(format!(
                "unknown family {other:?} (expected s or p)"
            ))),
        }
    }
}

type Key = (i64, i64);

enum Reduced {
    Zero,
    One,
    Memo(Key),
}

/// Normal form for `s`: `0 < h <= L/2` after wrapping `h` into `[0, L)` and
/// folding by the complement symmetry `s(L, h) = s(L, L - h)`.
fn reduce_balanced(len: i64, height: i64) -> Reduced {
    if len < 0 || (len == 0 && height != 0) {
        return Reduced::Zero;
    }
    if len == 0 {
        return Reduced::One;
    }
    let h = height.rem_euclid(len);
    let h = h.min(len - h);
    if h == 0 {
        Reduced::One
    } else {
        Reduced::Memo((len, h))
    }
}

/// Terms of the recurrence, valid for `0 <= h <= L/2`:
/// `s(L-h-1,h) + s(L-h,h) - s(L-2h-1,h) + s(h-1,L-2) + s(h-1,L-1)`.
/// The subtracted term is last.
fn balanced_terms((len, h): Key) -> [Key; 5] {
    [
        (len - h - 1, h),
        (len - h, h),
        (h - 1, len - 2),
        (h - 1, len - 1),
        (len - 2 * h - 1, h),
    ]
}

fn combine_balanced(values: &[BigUint]) -> BigUint {
    let positive: BigUint = values[..4].iter().sum();
    positive
        .checked_sub(&values[4])
        .expect("balanced-word recurrence produced a negative count")
}

/// Normal form for `p`: `0 < h < L`.
fn reduce_palindromic(len: i64, height: i64) -> Reduced {
    if len < 0 || (len == 0 && height != 0) {
        return Reduced::Zero;
    }
    if height == 0 || height == len {
        return Reduced::One;
    }
    let h = if height < 0 || height > len {
        height.rem_euclid(len)
    } else {
        height
    };
    if h == 0 {
        Reduced::One
    } else {
        Reduced::Memo((len, h))
    }
}

/// `p(L-h-1, h) + p(h-1, L-1)`.
fn palindromic_terms((len, h): Key) -> [Key; 2] {
    [(len - h - 1, h), (h - 1, len - 1)]
}

fn combine_palindromic(values: &[BigUint]) -> BigUint {
    values.iter().sum()
}

/// Looks up a term, or reports the memo key that still has to be computed.
fn lookup(
    memo: &HashMap<Key, BigUint>,
    reduce: fn(i64, i64) -> Reduced,
    (len, h): Key,
) -> std::result::Result<BigUint, Key> {
    match reduce(len, h) {
        Reduced::Zero => Ok(BigUint::zero()),
        Reduced::One => Ok(BigUint::one()),
        Reduced::Memo(key) => memo.get(&key).cloned().ok_or(key),
    }
}

fn evaluate<const N: usize>(
    memo: &mut HashMap<Key, BigUint>,
    reduce: fn(i64, i64) -> Reduced,
    terms: fn(Key) -> [Key; N],
    combine: fn(&[BigUint]) -> BigUint,
    len: i64,
    height: i64,
) -> BigUint {
    let root = match reduce(len, height) {
        Reduced::Zero => return BigUint::zero(),
        Reduced::One => return BigUint::one(),
        Reduced::Memo(key) => key,
    };
    let mut stack = vec![root];
    while let Some(&key) = stack.last() {
        if memo.contains_key(&key) {
            stack.pop();
            continue;
        }
        let mut values = Vec::with_capacity(N);
        let mut pending = false;
        for term in terms(key) {
            match lookup(memo, reduce, term) {
                Ok(v) => values.push(v),
                Err(missing) => {
                    stack.push(missing);
                    pending = true;
                }
            }
        }
        if !pending {
            memo.insert(key, combine(&values));
            stack.pop();
        }
    }
    memo[&root].clone()
}

/// Memoizing evaluator for the extended `s` and `p`.
///
/// The caches grow without bound and belong to this instance; create one
/// evaluator per thread.
#[derive(Clone, Debug, Default)]
pub struct Counter {
    balanced: HashMap<Key, BigUint>,
    palindromic: HashMap<Key, BigUint>,
}

impl Counter {
    pub fn new() -> Counter {
        Counter::default()
    }

    /// Extended `s(L, h)`: balanced words of length `L` and height `h mod L`.
    pub fn balanced(&mut self, len: i64, height: i64) -> Count {
        Count(evaluate(
            &mut self.balanced,
            reduce_balanced,
            balanced_terms,
            combine_balanced,
            len,
            height,
        ))
    }

    /// Extended `p(L, h)`: balanced palindromes of length `L` and height
    /// `h mod L`.
    pub fn palindromes(&mut self, len: i64, height: i64) -> Count {
        Count(evaluate(
            &mut self.palindromic,
            reduce_palindromic,
            palindromic_terms,
            combine_palindromic,
            len,
            height,
        ))
    }

    pub fn count(&mut self, family: Family, len: i64, height: i64) -> Count {
        match family {
            Family::Balanced => self.balanced(len, height),
            Family::Palindromic => self.palindromes(len, height),
        }
    }

    /// Balanced words of length `L >= 1` and height `0 <= h <= L` starting
    /// with `first` and ending with `last`.
    ///
    /// `s_{0,0}(L,h) = s(L-h-1, h)` and `s_{1,1}(L,h) = s(h-1, L-1)`; the two
    /// mixed cases are equinumerous under reversal and split the remainder.
    pub fn balanced_with_ends(
        &mut self,
        len: i64,
        height: i64,
        first: Symbol,
        last: Symbol,
    ) -> Result<Count> {
        if len < 1 || height < 0 || height > len {
            return Err(Error::InvalidArgument(format!(
                "end-constrained count needs 0 <= h <= L and L >= 1, got L={len} h={height}"
            )));
        }
        let zero_zero = self.balanced(len - height - 1, height);
        let one_one = self.balanced(height - 1, len - 1);
        match (first, last) {
            (Symbol::Zero, Symbol::Zero) => Ok(zero_zero),
            (Symbol::One, Symbol::One) => Ok(one_one),
            _ => {
                let total = self.balanced(len, height).0;
                let mixed = total
                    .checked_sub(&(zero_zero.0 + one_one.0))
                    .ok_or_else(|| {
                        Error::Inconsistency(format!("same-letter ends exceed s({len},{height})"))
                    })?;
                if mixed.bit(0) {
                    return Err(Error::Inconsistency(format!(
                        "mixed-end count {mixed} for L={len} h={height} is odd"
                    )));
                }
                Ok(Count(mixed >> 1))
            }
        }
    }

    /// Rows `L = 0..=max_len`, entries `h = 0..=L`.
    pub fn table(&mut self, family: Family, max_len: usize) -> CountTable {
        let rows = (0..=max_len as i64)
            .map(|len| (0..=len).map(|h| self.count(family, len, h)).collect())
            .collect();
        CountTable { family, rows }
    }
}

/// Triangular table of counts, row `L` holding heights `0..=L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    family: Family,
    rows: Vec<Vec<Count>>,
}

impl CountTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }

    pub fn max_len(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row_total(&self, len: usize) -> Count {
        self.rows[len].iter().sum()
    }

    /// Rows as plain `u64`, for comparisons against small fixtures.
    pub fn to_u64_rows(&self) -> Option<Vec<Vec<u64>>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(Count::to_u64).collect())
            .collect()
    }
}

/// `s(L) = 1 + Σ_{i=1..L} (L - i + 1) φ(i)`, the number of balanced words of
/// length `L`.
pub fn balanced_total(len: u64) -> Count {
    let mut total = BigUint::one();
    if len > 0 {
        let phi = TotientTable::sieve(len as usize).expect("len >= 1");
        for i in 1..=len {
            total += BigUint::from(len - i + 1) * phi.get(i as usize).unwrap();
        }
    }
    Count(total)
}

/// `p(L) = 1 + Σ_{i=0..ceil(L/2)-1} φ(L - 2i)`, the number of balanced
/// palindromes of length `L`.
pub fn palindrome_total(len: u64) -> Count {
    let mut total = BigUint::one();
    if len > 0 {
        let phi = TotientTable::sieve(len as usize).expect("len >= 1");
        for i in 0..len.div_ceil(2) {
            total += phi.get((len - 2 * i) as usize).unwrap();
        }
    }
    Count(total)
}

pub fn total(family: Family, len: u64) -> Count {
    match family {
        Family::Balanced => balanced_total(len),
        Family::Palindromic => palindrome_total(len),
    }
}

/// Closed form `s(L, 2) = floor(((L + 1)^2 + 2) / 6)`.
pub fn balanced_height_two(len: u64) -> Count {
    let next = BigUint::from(len) + 1u32;
    Count((&next * &next + 2u32) / 6u32)
}
