//! Binary words over `{0, 1}` and the maps acting on them.
//!
//! Besides the elementary operations (height, reversal, complement) this
//! module hosts the Sturmian morphism [`Word::phi`], its quasi-inverse the
//! 0-erasing map [`Word::theta`], and exhaustive enumerators of balanced
//! words. The enumerators are the brute-force oracle every counting result is
//! checked against.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest word the naive `2^L` filter accepts.
pub const NAIVE_MAX_LEN: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Symbol {
    Zero = 0,
    One = 1,
}

impl Symbol {
    pub fn flip(self) -> Symbol {
        match self {
            Symbol::Zero => Symbol::One,
            Symbol::One => Symbol::Zero,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
        }
    }
}

impl TryFrom<char> for Symbol {
    type Error = Error;

    fn try_from(c: char) -> Result<Symbol> {
        match c {
            '0' => Ok(Symbol::Zero),
            '1' => Ok(Symbol::One),
            other => Err(Error::InvalidArgument(format!(
                "expected '0' or '1', found {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{0, 1}`.
///
/// Ordering is lexicographic with `0 < 1`, which for words of equal length is
/// the canonical enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Word {
        Word { symbols }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of `1`s.
    pub fn height(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == Symbol::One).count()
    }

    /// Number of `0`s.
    pub fn width(&self) -> usize {
        self.len() - self.height()
    }

    pub fn first(&self) -> Option<Symbol> {
        self.symbols.first().copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.symbols.starts_with(&prefix.symbols)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.symbols.ends_with(&suffix.symbols)
    }

    pub fn reverse(&self) -> Word {
        Word::new(self.symbols.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Word {
        Word::new(self.symbols.iter().map(|s| s.flip()).collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len();
        (0..n / 2).all(|i| self.symbols[i] == self.symbols[n - 1 - i])
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word::new(symbols)
    }

    /// True iff any two factors of equal length differ by at most one in
    /// their number of `1`s.
    ///
    /// For each window length the minimum and maximum ones-count are tracked
    /// with a sliding window, `O(|w|^2)` overall.
    pub fn is_balanced(&self) -> bool {
        let n = self.len();
        let bits: Vec<usize> = self.symbols.iter().map(|&s| s as usize).collect();
        for window in 1..n {
            let mut count: usize = bits[..window].iter().sum();
            let (mut lo, mut hi) = (count, count);
            for end in window..n {
                count = count + bits[end] - bits[end - window];
                lo = lo.min(count);
                hi = hi.max(count);
                if hi - lo > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// The Sturmian morphism `0 -> 0, 1 -> 01`.
    pub fn phi(&self) -> Word {
        let mut out = Vec::with_capacity(self.len() + self.height());
        for &s in &self.symbols {
            if s == Symbol::One {
                out.push(Symbol::Zero);
            }
            out.push(s);
        }
        Word::new(out)
    }

    /// The 0-erasing map: removes one `0` from every maximal run of `0`s.
    pub fn theta(&self) -> Word {
        let mut out = Vec::with_capacity(self.len());
        let mut previous = Symbol::One;
        for &s in &self.symbols {
            let run_start = s == Symbol::Zero && previous == Symbol::One;
            if !run_start {
                out.push(s);
            }
            previous = s;
        }
        Word::new(out)
    }

    /// ASCII drawing of the lattice path coded by the word.
    ///
    /// The grid has `h + 1` rows and `L + 1` columns with the origin at the
    /// bottom-left. Symbol `i` is drawn in column `i`, on the row given by the
    /// number of `1`s before it: `_` for a `0`, `|` (naive) or `/` (standard)
    /// for a `1`. The endpoint `(L, h)` is marked with `*`. Every row has
    /// exactly `L + 1` characters and ends with a newline. The empty word
    /// draws as the empty string.
    pub fn render_path(&self, mode: RenderMode) -> String {
        if self.is_empty() {
            return String::new();
        }
        let columns = self.len() + 1;
        let rows = self.height() + 1;
        let mut grid = vec![vec![' '; columns]; rows];
        let mut row = 0;
        for (column, &s) in self.symbols.iter().enumerate() {
            match s {
                Symbol::Zero => grid[row][column] = '_',
                Symbol::One => {
                    grid[row][column] = mode.rise_glyph();
                    row += 1;
                }
            }
        }
        grid[row][columns - 1] = '*';

        let mut out = String::with_capacity(rows * (columns + 1));
        for line in grid.iter().rev() {
            out.extend(line.iter());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(Symbol::try_from)
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Word {
        Word::new(symbols)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RenderMode {
    /// `0 -> e1`, `1 -> e2`.
    Naive,
    /// `0 -> e1`, `1 -> e1 + e2`.
    Standard,
}

impl RenderMode {
    fn rise_glyph(self) -> char {
        match self {
            RenderMode::Naive => '|',
            RenderMode::Standard => '/',
        }
    }
}

impl FromStr for RenderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<RenderMode> {
        match s {
            "naive" => Ok(RenderMode::Naive),
            "standard" => Ok(RenderMode::Standard),
            other => Err(Error::InvalidArgument(format!(
                "unknown render mode {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Depth-first generation, abandoning a prefix as soon as it is
    /// unbalanced or its height budget becomes infeasible.
    #[default]
    Pruned,
    /// Filter all `2^L` words. Only for `L <= NAIVE_MAX_LEN`.
    Naive,
}

/// All balanced words of the given length and height having `prefix` as a
/// prefix and `suffix` as a suffix (the two may overlap), sorted
/// lexicographically.
pub fn enumerate_balanced(
    len: usize,
    height: usize,
    prefix: &Word,
    suffix: &Word,
) -> Result<Vec<Word>> {
    enumerate_balanced_with(Strategy::Pruned, len, height, prefix, suffix)
}

pub fn enumerate_balanced_with(
    strategy: Strategy,
    len: usize,
    height: usize,
    prefix: &Word,
    suffix: &Word,
) -> Result<Vec<Word>> {
    if height > len {
        return Err(Error::InvalidArgument(format!(
            "height {height} exceeds length {len}"
        )));
    }
    if prefix.len() > len || suffix.len() > len {
        return Err(Error::InvalidArgument(format!(
            "affix longer than length {len}"
        )));
    }
    match strategy {
        Strategy::Pruned => {
            let mut search = PrunedSearch::new(len, height, prefix.symbols(), suffix.symbols());
            search.extend();
            Ok(search.found)
        }
        Strategy::Naive => naive_filter(len, height, prefix, suffix),
    }
}

/// All balanced palindromes of the given length and height, optionally
/// restricted to those whose first (and last) letter is `first`.
pub fn enumerate_balanced_palindromes(
    len: usize,
    height: usize,
    first: Option<Symbol>,
) -> Result<Vec<Word>> {
    let affix = match first {
        Some(s) if len > 0 => Word::new(vec![s]),
        Some(_) => {
            // the empty word has no first letter
            if height > len {
                return Err(Error::InvalidArgument(format!(
                    "height {height} exceeds length {len}"
                )));
            }
            return Ok(Vec::new());
        }
        None => Word::empty(),
    };
    let mut words = enumerate_balanced(len, height, &affix, &affix)?;
    words.retain(Word::is_palindrome);
    Ok(words)
}

fn naive_filter(len: usize, height: usize, prefix: &Word, suffix: &Word) -> Result<Vec<Word>> {
    if len > NAIVE_MAX_LEN {
        return Err(Error::InvalidArgument(format!(
            "naive enumeration is limited to length {NAIVE_MAX_LEN}"
        )));
    }
    let mut found = Vec::new();
    for code in 0u64..(1u64 << len) {
        if code.count_ones() as usize != height {
            continue;
        }
        // most significant bit first, so numeric order is lexicographic order
        let word: Word = (0..len)
            .map(|i| {
                if code >> (len - 1 - i) & 1 == 1 {
                    Symbol::One
                } else {
                    Symbol::Zero
                }
            })
            .collect::<Vec<_>>()
            .into();
        if word.starts_with(prefix) && word.ends_with(suffix) && word.is_balanced() {
            found.push(word);
        }
    }
    Ok(found)
}

struct PrunedSearch<'a> {
    len: usize,
    height: usize,
    prefix: &'a [Symbol],
    suffix: &'a [Symbol],
    word: Vec<Symbol>,
    /// `ones[i]` is the number of `1`s among the first `i` symbols.
    ones: Vec<usize>,
    /// Min and max ones-count seen so far, indexed by window length.
    bounds: Vec<(usize, usize)>,
    found: Vec<Word>,
}

impl<'a> PrunedSearch<'a> {
    fn new(len: usize, height: usize, prefix: &'a [Symbol], suffix: &'a [Symbol]) -> Self {
        let mut ones = Vec::with_capacity(len + 1);
        ones.push(0);
        PrunedSearch {
            len,
            height,
            prefix,
            suffix,
            word: Vec::with_capacity(len),
            ones,
            bounds: vec![(0, 0); len + 1],
            found: Vec::new(),
        }
    }

    fn allows(&self, pos: usize, symbol: Symbol) -> bool {
        if pos < self.prefix.len() && self.prefix[pos] != symbol {
            return false;
        }
        let suffix_start = self.len - self.suffix.len();
        !(pos >= suffix_start && self.suffix[pos - suffix_start] != symbol)
    }

    fn extend(&mut self) {
        let pos = self.word.len();
        if pos == self.len {
            self.found.push(Word::new(self.word.clone()));
            return;
        }
        for symbol in [Symbol::Zero, Symbol::One] {
            if !self.allows(pos, symbol) {
                continue;
            }
            let ones_now = self.ones[pos] + symbol as usize;
            let remaining = self.len - pos - 1;
            if ones_now > self.height || ones_now + remaining < self.height {
                continue;
            }

            self.word.push(symbol);
            self.ones.push(ones_now);
            let end = pos + 1;
            let mut changed = Vec::new();
            let mut balanced = true;
            for window in 1..=end {
                let count = self.ones[end] - self.ones[end - window];
                let old = self.bounds[window];
                let new = if window == end {
                    (count, count)
                } else {
                    (old.0.min(count), old.1.max(count))
                };
                if new.1 - new.0 > 1 {
                    balanced = false;
                    break;
                }
                if new != old {
                    changed.push((window, old));
                    self.bounds[window] = new;
                }
            }
            if balanced {
                self.extend();
            }
            for (window, old) in changed.into_iter().rev() {
                self.bounds[window] = old;
            }
            self.ones.pop();
            self.word.pop();
        }
    }
}
