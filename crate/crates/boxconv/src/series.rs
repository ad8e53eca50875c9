//! Truncated non-commutative power series over exact rationals.
//!
//! An [`NcSeries`] stores the coefficients `f_w` of a power series without
//! constant term in `s` non-commuting indeterminates, exactly for words
//! `1 <= |w| <= maxdeg`. Missing words mean zero; zero coefficients are never
//! stored.
//!
//! Words order by length first, then lexicographically; iteration and
//! serialization follow that order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use crate::ncpart::NcPartition;
use crate::rational::Rational;

/// A word over the alphabet `{1..s}`, indexing one series coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation, the monoid product of words.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Single-letter word.
    pub fn letter(i: u32) -> Word {
        Word(alloc::vec![i])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// Errors from series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Alphabet sizes differ in a binary operation.
    AlphabetMismatch { left: u32, right: u32 },
    /// Truncation degrees differ where an operation requires equality.
    DegreeMismatch { left: u32, right: u32 },
    /// A word is empty, too long, or uses letters outside `1..=s`.
    WordOutOfRange,
    /// Block positions outside `1..=|w|` or not strictly increasing.
    BadPositions,
    /// Partition ground set does not match the word length.
    SizeMismatch { word_len: usize, ground: usize },
    /// `s` or `maxdeg` is zero.
    BadDimensions,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::AlphabetMismatch { left, right } => {
                write!(f, "alphabet sizes differ: {left} vs {right}")
            }
            SeriesError::DegreeMismatch { left, right } => {
                write!(f, "truncation degrees differ: {left} vs {right}")
            }
            SeriesError::WordOutOfRange => write!(f, "word outside alphabet or degree range"),
            SeriesError::BadPositions => write!(f, "positions must be increasing and in range"),
            SeriesError::SizeMismatch { word_len, ground } => {
                write!(f, "partition of {ground} applied to word of length {word_len}")
            }
            SeriesError::BadDimensions => write!(f, "s and maxdeg must be at least 1"),
        }
    }
}

/// Truncated non-commutative power series without constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct NcSeries {
    s: u32,
    maxdeg: u32,
    coeffs: BTreeMap<Word, Rational>,
}

impl fmt::Debug for NcSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcSeries(s={}, maxdeg={}, {{", self.s, self.maxdeg)?;
        for (i, (w, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w:?}: {c}")?;
        }
        write!(f, "}})")
    }
}

impl NcSeries {
    /// The zero series.
    pub fn zero(s: u32, maxdeg: u32) -> Self {
        assert!(s >= 1 && maxdeg >= 1, "s and maxdeg must be at least 1");
        NcSeries {
            s,
            maxdeg,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a series from `(word, coefficient)` pairs, validating every
    /// word and dropping zeros.
    pub fn from_coeffs<I>(s: u32, maxdeg: u32, coeffs: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        if s == 0 || maxdeg == 0 {
            return Err(SeriesError::BadDimensions);
        }
        let mut out = NcSeries::zero(s, maxdeg);
        for (w, c) in coeffs {
            if !out.word_in_range(&w) {
                return Err(SeriesError::WordOutOfRange);
            }
            if !c.is_zero() {
                out.coeffs.insert(w, c);
            }
        }
        Ok(out)
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn word_in_range(&self, w: &Word) -> bool {
        !w.is_empty() && w.len() <= self.maxdeg as usize && w.max_letter() <= self.s
    }

    /// The coefficient `f_w`; zero if absent. Errors on an empty word, a word
    /// longer than `maxdeg`, or letters outside the alphabet.
    pub fn coeff(&self, w: &Word) -> Result<Rational, SeriesError> {
        if !self.word_in_range(w) {
            return Err(SeriesError::WordOutOfRange);
        }
        Ok(self.coeff_unchecked(w))
    }

    /// As [`coeff`](Self::coeff) without the range check; absent words are
    /// zero. Internal hot path.
    pub fn coeff_unchecked(&self, w: &Word) -> Rational {
        self.coeffs.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sets `f_w = c`, removing the entry when `c` is zero.
    pub fn set_coeff(&mut self, w: Word, c: Rational) -> Result<(), SeriesError> {
        if !self.word_in_range(&w) {
            return Err(SeriesError::WordOutOfRange);
        }
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
        Ok(())
    }

    /// Nonzero coefficients in (length, lex) word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Component-wise sum; the result is truncated to the smaller degree.
    pub fn add(&self, other: &NcSeries) -> Result<NcSeries, SeriesError> {
        if self.s != other.s {
            return Err(SeriesError::AlphabetMismatch {
                left: self.s,
                right: other.s,
            });
        }
        let maxdeg = self.maxdeg.min(other.maxdeg);
        let mut out = NcSeries::zero(self.s, maxdeg);
        for src in [self, other] {
            for (w, c) in &src.coeffs {
                if w.len() > maxdeg as usize {
                    continue;
                }
                let sum = out.coeff_unchecked(w) + c;
                if sum.is_zero() {
                    out.coeffs.remove(w);
                } else {
                    out.coeffs.insert(w.clone(), sum);
                }
            }
        }
        Ok(out)
    }

    /// Scalar multiple `c * f`.
    pub fn scale(&self, c: &Rational) -> NcSeries {
        let mut out = NcSeries::zero(self.s, self.maxdeg);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.coeffs {
            out.coeffs.insert(w.clone(), c * v);
        }
        out
    }

    /// `f - g`, truncated to the smaller degree.
    pub fn sub(&self, other: &NcSeries) -> Result<NcSeries, SeriesError> {
        self.add(&other.scale(&crate::rational::rat_int(-1)))
    }

    /// Concatenation (Cauchy) product: `(f g)_w` sums `f_{w1} g_{w2}` over
    /// all splittings `w = w1 w2` into non-empty halves. Since neither input
    /// has a constant term the output has no degree-one terms.
    pub fn cauchy_mul(&self, other: &NcSeries) -> Result<NcSeries, SeriesError> {
        if self.s != other.s {
            return Err(SeriesError::AlphabetMismatch {
                left: self.s,
                right: other.s,
            });
        }
        let maxdeg = self.maxdeg.min(other.maxdeg);
        let mut out = NcSeries::zero(self.s, maxdeg);
        for (w1, c1) in &self.coeffs {
            if w1.len() >= maxdeg as usize {
                continue;
            }
            for (w2, c2) in &other.coeffs {
                if w1.len() + w2.len() > maxdeg as usize {
                    continue;
                }
                let w = w1.concat(w2);
                let sum = out.coeff_unchecked(&w) + c1 * c2;
                if sum.is_zero() {
                    out.coeffs.remove(&w);
                } else {
                    out.coeffs.insert(w, sum);
                }
            }
        }
        Ok(out)
    }

    /// Truncates to degree `d` (no-op if `d >= maxdeg`).
    pub fn truncate(&self, d: u32) -> NcSeries {
        let d = d.min(self.maxdeg).max(1);
        let mut out = NcSeries::zero(self.s, d);
        for (w, c) in &self.coeffs {
            if w.len() <= d as usize {
                out.coeffs.insert(w.clone(), c.clone());
            }
        }
        out
    }
}

/// All words with `1 <= |w| <= maxdeg` over `{1..s}` in (length, lex) order.
pub fn words_up_to(s: u32, maxdeg: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    for _ in 1..=maxdeg {
        let mut next = Vec::with_capacity(level.len() * s as usize);
        for p in &level {
            for l in 1..=s {
                let mut q = p.clone();
                q.push(l);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        level = next;
    }
    out
}

/// The subword of `w` at the 1-based `positions`, which must be strictly
/// increasing and within `1..=|w|`.
pub fn restrict_word(w: &Word, positions: &[usize]) -> Result<Word, SeriesError> {
    let mut prev = 0usize;
    let mut letters = Vec::with_capacity(positions.len());
    for &p in positions {
        if p <= prev || p > w.len() {
            return Err(SeriesError::BadPositions);
        }
        letters.push(w.letters()[p - 1]);
        prev = p;
    }
    Ok(Word::new(letters))
}

/// The block coefficient functional `X_{w,pi}(f)`: the product over the
/// blocks `V` of `pi` of the coefficients of `f` at the subwords `w|V`.
///
/// Not linear in `f` (it is a product of coefficients), which is exactly why
/// the boxed convolution does not distribute over addition.
pub fn eval_block_functional(
    f: &NcSeries,
    w: &Word,
    p: &NcPartition,
) -> Result<Rational, SeriesError> {
    if p.n() != w.len() {
        return Err(SeriesError::SizeMismatch {
            word_len: w.len(),
            ground: p.n(),
        });
    }
    if !f.word_in_range(w) {
        return Err(SeriesError::WordOutOfRange);
    }
    Ok(eval_block_functional_unchecked(f, w, p))
}

/// As [`eval_block_functional`] without the range checks. Internal hot path
/// shared by the convolution and representation modules.
pub fn eval_block_functional_unchecked(f: &NcSeries, w: &Word, p: &NcPartition) -> Rational {
    let mut acc = crate::rational::one();
    for block in p.blocks() {
        let letters: Vec<u32> = block.iter().map(|&v| w.letters()[v - 1]).collect();
        let c = f.coeff_unchecked(&Word::new(letters));
        if c.is_zero() {
            return crate::rational::zero();
        }
        acc *= c;
    }
    acc
}
