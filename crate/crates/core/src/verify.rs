//! Self-check harness.
//!
//! Each suite re-derives a family of facts through a second route
//! (enumeration, closed forms, generating functions, bijections) and compares
//! it to the recurrences. Used by the `verify` command.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::counting::{self, Count, Counter, Family};
use crate::ratfunc::{self, Rational};
use crate::words::{self, Strategy, Symbol, Word};

/// Sample values of `s(L, h)` for `0 <= h <= L <= 10`.
pub const BALANCED_TABLE: [&[u64]; 11] = [
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 3, 3, 1],
    &[1, 4, 4, 4, 1],
    &[1, 5, 6, 6, 5, 1],
    &[1, 6, 8, 6, 8, 6, 1],
    &[1, 7, 11, 8, 8, 11, 7, 1],
    &[1, 8, 13, 12, 8, 12, 13, 8, 1],
    &[1, 9, 17, 13, 12, 12, 13, 17, 9, 1],
    &[1, 10, 20, 16, 16, 10, 16, 16, 20, 10, 1],
];

/// Sample values of `p(L, h)` for `0 <= h <= L <= 10`.
pub const PALINDROME_TABLE: [&[u64]; 11] = [
    &[1],
    &[1, 1],
    &[1, 0, 1],
    &[1, 1, 1, 1],
    &[1, 0, 2, 0, 1],
    &[1, 1, 2, 2, 1, 1],
    &[1, 0, 2, 0, 2, 0, 1],
    &[1, 1, 3, 2, 2, 3, 1, 1],
    &[1, 0, 3, 0, 2, 0, 3, 0, 1],
    &[1, 1, 3, 3, 2, 2, 3, 3, 1, 1],
    &[1, 0, 4, 0, 2, 0, 2, 0, 4, 0, 1],
];

/// Longest words the naive `2^L` filter is run on.
const NAIVE_CROSS_CHECK_MAX: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Range of `L` for identity and table suites.
    pub max_len: usize,
    /// Range of `L` for enumeration-based suites; 0 skips them.
    pub brute_max: usize,
    /// Largest height for generating-function and profile suites.
    pub h_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_len: 12,
            brute_max: 12,
            h_max: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteStatus {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: u64,
    pub status: SuiteStatus,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        !matches!(self.status, SuiteStatus::Failed(_))
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            SuiteStatus::Passed => write!(f, "PASS {} ({} checks)", self.name, self.checks),
            SuiteStatus::Failed(why) => write!(f, "FAIL {}: {}", self.name, why),
            SuiteStatus::Skipped(why) => write!(f, "SKIP {}: {}", self.name, why),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suites: Vec<SuiteResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Counts checks and stops at the first failure.
struct Suite {
    checks: u64,
}

type Outcome = Result<(), String>;

impl Suite {
    fn new() -> Suite {
        Suite { checks: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> Outcome {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(what())
        }
    }

    fn finish(self, name: &'static str, outcome: Outcome) -> SuiteResult {
        SuiteResult {
            name,
            checks: self.checks,
            status: match outcome {
                Ok(()) => SuiteStatus::Passed,
                Err(why) => SuiteStatus::Failed(why),
            },
        }
    }
}

fn skipped(name: &'static str, why: &str) -> SuiteResult {
    SuiteResult {
        name,
        checks: 0,
        status: SuiteStatus::Skipped(why.to_string()),
    }
}

pub fn run(config: &VerifyConfig) -> VerificationReport {
    let mut counter = Counter::new();
    let suites = vec![
        golden_tables(&mut counter, config),
        oracle_equivalence(&mut counter, config),
        symmetry(&mut counter, config),
        row_sums(&mut counter, config),
        identities(&mut counter, config),
        bijections(config),
        generating_functions(&mut counter, config),
        asymptotic_profiles(&mut counter, config),
    ];
    VerificationReport { suites }
}

fn golden_tables(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    const NAME: &str = "golden-tables";
    if config.max_len < 10 {
        return skipped(NAME, "needs --max-L >= 10");
    }
    let mut suite = Suite::new();
    let outcome = (|| {
        for (family, golden) in [
            (Family::Balanced, &BALANCED_TABLE),
            (Family::Palindromic, &PALINDROME_TABLE),
        ] {
            let rows = counter.table(family, 10).to_u64_rows();
            let expected: Vec<Vec<u64>> = golden.iter().map(|r| r.to_vec()).collect();
            suite.check(rows.as_ref() == Some(&expected), || {
                format!("{family} table differs from the reference values")
            })?;
        }
        Ok(())
    })();
    suite.finish(NAME, outcome)
}

fn oracle_equivalence(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    const NAME: &str = "oracle-equivalence";
    if config.brute_max == 0 {
        return skipped(NAME, "--brute-max 0");
    }
    let mut suite = Suite::new();
    let outcome = (|| {
        let none = Word::empty();
        for len in 0..=config.brute_max {
            for h in 0..=len {
                let words =
                    words::enumerate_balanced(len, h, &none, &none).map_err(|e| e.to_string())?;
                suite.check(
                    counter.balanced(len as i64, h as i64) == words.len() as u64,
                    || format!("s({len},{h}) disagrees with enumeration"),
                )?;
                let pals = words.iter().filter(|w| w.is_palindrome()).count();
                suite.check(
                    counter.palindromes(len as i64, h as i64) == pals as u64,
                    || format!("p({len},{h}) disagrees with enumeration"),
                )?;
                if len <= NAIVE_CROSS_CHECK_MAX {
                    let naive =
                        words::enumerate_balanced_with(Strategy::Naive, len, h, &none, &none)
                            .map_err(|e| e.to_string())?;
                    suite.check(naive == words, || {
                        format!("pruned and naive enumerations differ at L={len} h={h}")
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(NAME, outcome)
}

fn symmetry(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    let mut suite = Suite::new();
    let outcome = (|| {
        for len in 0..=config.max_len as i64 {
            for h in 0..=len {
                suite.check(
                    counter.balanced(len, h) == counter.balanced(len, len - h),
                    || format!("s({len},{h}) != s({len},{})", len - h),
                )?;
                suite.check(
                    counter.palindromes(len, h) == counter.palindromes(len, len - h),
                    || format!("p({len},{h}) != p({len},{})", len - h),
                )?;
            }
        }
        Ok(())
    })();
    suite.finish("symmetry", outcome)
}

fn row_sums(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    let mut suite = Suite::new();
    let outcome = (|| {
        for family in [Family::Balanced, Family::Palindromic] {
            let table = counter.table(family, config.max_len);
            for len in 0..=config.max_len {
                suite.check(
                    table.row_total(len) == counting::total(family, len as u64),
                    || format!("{family} row {len} does not sum to the closed form"),
                )?;
            }
        }
        Ok(())
    })();
    suite.finish("row-sums", outcome)
}

fn identities(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    let mut suite = Suite::new();
    let max = config.max_len as i64;
    let outcome = (|| {
        for len in 1..=max {
            // Σ_{h<L} h s(L,h) = L (s(L) - 2) / 2, compared after doubling
            let weighted: Count = (0..len)
                .map(|h| Count::from(counter.balanced(len, h).into_biguint() * h as u64))
                .sum();
            let total = counting::balanced_total(len as u64).into_biguint();
            suite.check(
                weighted.into_biguint() * 2u32 == (total - 2u32) * len as u64,
                || format!("weighted row sum fails at L={len}"),
            )?;
        }
        for h in 1..=max {
            let upper: Count = (h..2 * h).map(|l| counter.balanced(l, h)).sum();
            let lower: Count = (0..h).map(|l| counter.balanced(l, h)).sum();
            let rhs = counting::balanced_total(h as u64).into_biguint()
                + counting::balanced_total(h as u64 - 1).into_biguint();
            suite.check(
                upper.into_biguint() + (h as u64 + 1) == rhs + lower.into_biguint(),
                || format!("band difference identity fails at h={h}"),
            )?;
        }
        for h in 2..=max {
            for len in h..=max {
                let folded = h + (len - h) % (h - 1);
                let a = counter
                    .balanced_with_ends(len, h, Symbol::One, Symbol::One)
                    .map_err(|e| e.to_string())?;
                let b = counter
                    .balanced_with_ends(folded, h, Symbol::One, Symbol::One)
                    .map_err(|e| e.to_string())?;
                suite.check(a == b, || {
                    format!("s_11 periodicity fails at L={len} h={h}")
                })?;
            }
        }
        for len in (0..=max).step_by(2) {
            for h in (1..=len).step_by(2) {
                suite.check(counter.palindromes(len, h).is_zero(), || {
                    format!("p({len},{h}) should vanish")
                })?;
            }
        }
        for len in 0..=max {
            suite.check(
                counting::balanced_height_two(len as u64) == counter.balanced(len, 2),
                || format!("height-two closed form fails at L={len}"),
            )?;
            for h in 0..=len {
                suite.check(
                    counter.palindromes(len, h) <= counter.balanced(len, h),
                    || format!("p({len},{h}) > s({len},{h})"),
                )?;
            }
        }
        Ok(())
    })();
    suite.finish("identities", outcome)
}

fn theta_image(domain: &[Word]) -> BTreeSet<Word> {
    domain.iter().map(Word::theta).collect()
}

fn bijections(config: &VerifyConfig) -> SuiteResult {
    const NAME: &str = "bijections";
    if config.brute_max == 0 {
        return skipped(NAME, "--brute-max 0");
    }
    let mut suite = Suite::new();
    let outcome = (|| {
        let w = |s: &str| -> Word { s.parse().expect("literal word") };
        let (none, zero, one) = (Word::empty(), w("0"), w("1"));
        let enumerate = |len: usize, h: usize, pre: &Word, suf: &Word| {
            words::enumerate_balanced(len, h, pre, suf).map_err(|e| e.to_string())
        };
        let bijective = |suite: &mut Suite, domain: Vec<Word>, target: Vec<Word>, what: String| {
            let image = theta_image(&domain);
            let target: BTreeSet<Word> = target.into_iter().collect();
            suite.check(image.len() == domain.len() && image == target, || {
                format!("theta is not a bijection for {what}")
            })
        };
        for len in 1..=config.brute_max {
            for h in 0..=len {
                if len > 2 * h {
                    bijective(
                        &mut suite,
                        enumerate(len, h, &zero, &zero)?,
                        enumerate(len - h - 1, h, &none, &none)?,
                        format!("S_00({len},{h})"),
                    )?;
                    let pal0 = words::enumerate_balanced_palindromes(len, h, Some(Symbol::Zero))
                        .map_err(|e| e.to_string())?;
                    let pal = words::enumerate_balanced_palindromes(len - h - 1, h, None)
                        .map_err(|e| e.to_string())?;
                    bijective(&mut suite, pal0, pal, format!("P_0({len},{h})"))?;
                }
                if len >= 2 * h {
                    bijective(
                        &mut suite,
                        enumerate(len, h, &zero, &one)?,
                        enumerate(len - h, h, &none, &one)?,
                        format!("S_01({len},{h})"),
                    )?;
                    bijective(
                        &mut suite,
                        enumerate(len, h, &one, &zero)?,
                        enumerate(len - h, h, &one, &none)?,
                        format!("S_10({len},{h})"),
                    )?;
                }
                if len + 1 >= 2 * h {
                    let target_len = len + 1 - h;
                    bijective(
                        &mut suite,
                        enumerate(len, h, &one, &one)?,
                        enumerate(target_len, h, &one, &one)?,
                        format!("S_11({len},{h})"),
                    )?;
                    let pal1 = words::enumerate_balanced_palindromes(len, h, Some(Symbol::One))
                        .map_err(|e| e.to_string())?;
                    let target =
                        words::enumerate_balanced_palindromes(target_len, h, Some(Symbol::One))
                            .map_err(|e| e.to_string())?;
                    bijective(&mut suite, pal1, target, format!("P_1({len},{h})"))?;
                }
                for word in enumerate(len, h, &none, &none)? {
                    suite.check(
                        word.phi().is_balanced() && word.theta().is_balanced(),
                        || format!("balance not preserved for {word}"),
                    )?;
                    if word.is_palindrome() {
                        suite.check(word.theta().is_palindrome(), || {
                            format!("palindrome not preserved for {word}")
                        })?;
                    }
                }
            }
        }
        Ok(())
    })();
    suite.finish(NAME, outcome)
}

fn generating_functions(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    let mut suite = Suite::new();
    let terms = config.max_len.max(60);
    let outcome = (|| {
        for family in [Family::Balanced, Family::Palindromic] {
            for h in 0..=config.h_max {
                let gf =
                    ratfunc::generating_function(counter, family, h).map_err(|e| e.to_string())?;
                let series = gf.series(terms);
                for (len, coefficient) in series.iter().enumerate() {
                    let count = counter.count(family, len as i64, h as i64).into_biguint();
                    suite.check(*coefficient == Rational::from_integer(count.into()), || {
                        format!("{family}_{h} coefficient {len} disagrees with the recurrence")
                    })?;
                }
                if family == Family::Balanced && h >= 3 && h % 2 == 1 {
                    let at_minus_one = gf.numerator().eval(&ratfunc::rational(-1));
                    suite.check(at_minus_one.is_zero(), || {
                        format!("numerator of S_{h} does not vanish at -1")
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish("generating-functions", outcome)
}

fn asymptotic_profiles(counter: &mut Counter, config: &VerifyConfig) -> SuiteResult {
    let mut suite = Suite::new();
    let outcome = (|| {
        for family in [Family::Balanced, Family::Palindromic] {
            for h in 2..=config.h_max.max(2) {
                let profile = ratfunc::asymptotic_profile(counter, family, h as i64)
                    .map_err(|e| e.to_string())?;
                suite.check(profile.alpha > Rational::zero(), || {
                    format!("alpha of {family}_{h} is not positive")
                })?;
                for len in 0..=5 * profile.period as u64 {
                    let count = counter.count(family, len as i64, h as i64).into_biguint();
                    suite.check(
                        profile.reconstruct(len) == Rational::from_integer(count.into()),
                        || format!("{family}_{h} profile fails at L={len}"),
                    )?;
                }
            }
        }
        Ok(())
    })();
    suite.finish("asymptotic-profiles", outcome)
}
