//! The boxed convolution group on truncated series.
//!
//! For cumulant series `f, g` the boxed convolution is the Kreweras-paired
//! sum over non-crossing partitions
//!
//! ```text
//! (f ⊠ g)_w = Σ_{π ∈ NC(|w|)} X_{w,π}(f) · X_{w,K(π)}(g)
//! ```
//!
//! with `X_{w,π}` the block coefficient functional of the [`series`]
//! module. The unit is `z_1 + ... + z_s`; series with invertible first-order
//! coefficients form a group, those with first-order coefficients equal to 1
//! the distinguished unipotent subgroup.
//!
//! Moment and cumulant series are two coordinate systems on the same set:
//! right translation by `Zeta` (all coefficients 1) converts cumulants to
//! moments, its `⊠`-inverse `Moeb` converts back, and `⊞_V`/`⊠_V` are the
//! moment-coordinate transports of `+` and `⊠`.
//!
//! [`series`]: crate::series


use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ncpart::{NcCache, PartitionError};
use crate::rational::{one, Rational};
use crate::series::{words_up_to, NcSeries, SeriesError, Word};

/// Errors from group operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvError {
    Series(SeriesError),
    Partition(PartitionError),
    /// An inverse was requested for a series with a zero first-order
    /// coefficient.
    NotInvertible,
    /// An operation required membership in the unipotent subgroup
    /// (first-order coefficients all 1).
    NotUnipotent,
}

impl core::fmt::Display for ConvError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConvError::Series(e) => write!(f, "{e}"),
            ConvError::Partition(e) => write!(f, "{e}"),
            ConvError::NotInvertible => write!(f, "series has a zero first-order coefficient"),
            ConvError::NotUnipotent => {
                write!(f, "series is not in the unipotent subgroup")
            }
        }
    }
}

impl From<SeriesError> for ConvError {
    fn from(e: SeriesError) -> Self {
        ConvError::Series(e)
    }
}

impl From<PartitionError> for ConvError {
    fn from(e: PartitionError) -> Self {
        ConvError::Partition(e)
    }
}

/// The `⊠`-unit `z_1 + ... + z_s`.
pub fn unit(s: u32, maxdeg: u32) -> NcSeries {
    let mut f = NcSeries::zero(s, maxdeg);
    for i in 1..=s {
        f.set_coeff(Word::letter(i), one()).expect("unit word");
    }
    f
}

/// The all-ones series, the moment series of the identity tuple.
pub fn zeta(s: u32, maxdeg: u32) -> NcSeries {
    let mut f = NcSeries::zero(s, maxdeg);
    for w in words_up_to(s, maxdeg) {
        f.set_coeff(w, one()).expect("word in range");
    }
    f
}

/// The `⊠`-inverse of [`zeta`]. At `s = 1` its coefficients are the signed
/// Catalan numbers; no closed form is assumed here, it is computed as an
/// inverse.
pub fn moeb(s: u32, maxdeg: u32) -> NcSeries {
    box_inverse(&zeta(s, maxdeg)).expect("zeta is invertible")
}

/// Membership in the full group: all first-order coefficients invertible.
pub fn is_group_element(f: &NcSeries) -> bool {
    (1..=f.s()).all(|i| !f.coeff_unchecked(&Word::letter(i)).is_zero())
}

/// Membership in the unipotent subgroup: all first-order coefficients 1.
pub fn is_unipotent_element(f: &NcSeries) -> bool {
    (1..=f.s()).all(|i| f.coeff_unchecked(&Word::letter(i)).is_one())
}

/// Coefficients of `f` at every subword of `w`, indexed by the position
/// bitmask. Shared across all partitions of one convolution coefficient.
fn subword_values(f: &NcSeries, w: &Word) -> Vec<Rational> {
    let n = w.len();
    let mut vals = alloc::vec![Rational::zero(); 1 << n];
    for mask in 1u32..(1 << n) {
        let letters: Vec<u32> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| w.letters()[i])
            .collect();
        vals[mask as usize] = f.coeff_unchecked(&Word::new(letters));
    }
    vals
}

fn masked_product(values: &[Rational], masks: &[u32]) -> Rational {
    let mut acc = Rational::one();
    for &m in masks {
        let v = &values[m as usize];
        if v.is_zero() {
            return Rational::zero();
        }
        acc *= v;
    }
    acc
}

/// One coefficient of `f ⊠ g`, sharing the caller's enumeration cache.
pub fn box_conv_coeff(
    f: &NcSeries,
    g: &NcSeries,
    w: &Word,
    cache: &mut NcCache,
) -> Result<Rational, ConvError> {
    let level = cache.level(w.len())?;
    let fv = subword_values(f, w);
    let gv = subword_values(g, w);
    let mut acc = Rational::zero();
    for (pm, km) in level.partition_masks.iter().zip(&level.complement_masks) {
        let left = masked_product(&fv, pm);
        if left.is_zero() {
            continue;
        }
        let right = masked_product(&gv, km);
        if right.is_zero() {
            continue;
        }
        acc += left * right;
    }
    Ok(acc)
}

/// The boxed convolution `f ⊠ g`. Requires equal alphabets and equal
/// truncation degrees; coefficients are integer polynomials in the inputs'
/// coefficients.
pub fn box_conv(f: &NcSeries, g: &NcSeries) -> Result<NcSeries, ConvError> {
    check_same_shape(f, g)?;
    let mut cache = NcCache::new();
    let mut out = NcSeries::zero(f.s(), f.maxdeg());
    for w in words_up_to(f.s(), f.maxdeg()) {
        let c = box_conv_coeff(f, g, &w, &mut cache)?;
        out.set_coeff(w, c)?;
    }
    Ok(out)
}

fn check_same_shape(f: &NcSeries, g: &NcSeries) -> Result<(), ConvError> {
    if f.s() != g.s() {
        return Err(ConvError::Series(SeriesError::AlphabetMismatch {
            left: f.s(),
            right: g.s(),
        }));
    }
    if f.maxdeg() != g.maxdeg() {
        return Err(ConvError::Series(SeriesError::DegreeMismatch {
            left: f.maxdeg(),
            right: g.maxdeg(),
        }));
    }
    Ok(())
}

/// The two-sided `⊠`-inverse of `f`, solved degree by degree from
/// `f ⊠ h = unit`: the all-singletons term isolates `h_w`, every other term
/// only involves `h` at strictly shorter words.
pub fn box_inverse(f: &NcSeries) -> Result<NcSeries, ConvError> {
    if !is_group_element(f) {
        return Err(ConvError::NotInvertible);
    }
    let s = f.s();
    let maxdeg = f.maxdeg();
    let mut cache = NcCache::new();
    let mut h = NcSeries::zero(s, maxdeg);
    for i in 1..=s {
        let fi = f.coeff_unchecked(&Word::letter(i));
        h.set_coeff(Word::letter(i), Rational::one() / fi)?;
    }
    for w in words_up_to(s, maxdeg) {
        let n = w.len();
        if n < 2 {
            continue;
        }
        let level = cache.level(n)?;
        let fv = subword_values(f, &w);
        // h is complete below length n, which covers every complement block
        let hv = subword_values(&h, &w);
        // leading factor of the all-singletons term: product of f over letters
        let mut lead = Rational::one();
        for i in 0..n {
            lead *= &fv[1 << i];
        }
        let mut rest = Rational::zero();
        for ((p, pm), km) in level
            .partitions
            .iter()
            .zip(&level.partition_masks)
            .zip(&level.complement_masks)
        {
            if p.num_blocks() == n {
                continue; // the all-singletons term being solved for
            }
            let left = masked_product(&fv, pm);
            if left.is_zero() {
                continue;
            }
            let right = masked_product(&hv, km);
            if right.is_zero() {
                continue;
            }
            rest += left * right;
        }
        h.set_coeff(w, -rest / lead.clone())?;
    }
    debug_assert_eq!(box_conv(f, &h).unwrap(), unit(s, maxdeg));
    Ok(h)
}

/// Moment series from a cumulant series: right translation by `Zeta`.
pub fn moments_from_cumulants(r: &NcSeries) -> Result<NcSeries, ConvError> {
    box_conv(r, &zeta(r.s(), r.maxdeg()))
}

/// Cumulant series from a moment series: right translation by `Moeb`.
pub fn cumulants_from_moments(m: &NcSeries) -> Result<NcSeries, ConvError> {
    box_conv(m, &moeb(m.s(), m.maxdeg()))
}

/// Free additive convolution in moment coordinates:
/// `(f ⊠ Moeb + g ⊠ Moeb) ⊠ Zeta`.
pub fn addv(f: &NcSeries, g: &NcSeries) -> Result<NcSeries, ConvError> {
    check_same_shape(f, g)?;
    let mb = moeb(f.s(), f.maxdeg());
    let sum = box_conv(f, &mb)?.add(&box_conv(g, &mb)?)?;
    box_conv(&sum, &zeta(f.s(), f.maxdeg()))
}

/// Free multiplicative convolution in moment coordinates:
/// `f ⊠ Moeb ⊠ g`.
pub fn mulv(f: &NcSeries, g: &NcSeries) -> Result<NcSeries, ConvError> {
    check_same_shape(f, g)?;
    let r = box_conv(f, &moeb(f.s(), f.maxdeg()))?;
    box_conv(&r, g)
}

/// Joint cumulant series of two free `s`-tuples over the doubled alphabet
/// `{1..2s}`: words inside `1..s` carry `f`'s coefficients, words inside
/// `s+1..2s` carry `g`'s (shifted down), and every mixed word vanishes.
pub fn join_free(f: &NcSeries, g: &NcSeries) -> Result<NcSeries, ConvError> {
    if f.maxdeg() != g.maxdeg() {
        return Err(ConvError::Series(SeriesError::DegreeMismatch {
            left: f.maxdeg(),
            right: g.maxdeg(),
        }));
    }
    if f.s() != g.s() {
        return Err(ConvError::Series(SeriesError::AlphabetMismatch {
            left: f.s(),
            right: g.s(),
        }));
    }
    let s = f.s();
    let mut out = NcSeries::zero(2 * s, f.maxdeg());
    for (w, c) in f.iter() {
        out.set_coeff(w.clone(), c.clone())?;
    }
    for (w, c) in g.iter() {
        let shifted = Word::new(w.letters().iter().map(|&l| l + s).collect());
        out.set_coeff(shifted, c.clone())?;
    }
    Ok(out)
}

/// Grouped cumulant sum of Lemma-style interval grouping: with
/// `σ = interval(n, cuts)` and the word `(1, 2, ..., n)`,
/// returns `Σ_{π ∈ NC(n), π ∨ σ = 1_n} κ_π`.
///
/// Here `n` is the alphabet size of `r`, which must be truncated at degree
/// `>= n` so that the full cumulant `κ_n` exists.
pub fn grouped_cumulants(r: &NcSeries, cuts: &[usize]) -> Result<Rational, ConvError> {
    let n = r.s() as usize;
    if (r.maxdeg() as usize) < n {
        return Err(ConvError::Series(SeriesError::WordOutOfRange));
    }
    let sigma = crate::ncpart::NcPartition::interval(n, cuts)?;
    let full = crate::ncpart::NcPartition::full(n);
    let w = Word::new((1..=n as u32).collect());
    let mut cache = NcCache::new();
    let level = cache.level(n)?;
    let rv = subword_values(r, &w);
    let mut acc = Rational::zero();
    for (p, pm) in level.partitions.iter().zip(&level.partition_masks) {
        if p.join(&sigma)? != full {
            continue;
        }
        acc += masked_product(&rv, pm);
    }
    Ok(acc)
}

/// The group commutator `f ⊠ g ⊠ f⁻¹ ⊠ g⁻¹`.
pub fn commutator(f: &NcSeries, g: &NcSeries) -> Result<NcSeries, ConvError> {
    check_same_shape(f, g)?;
    let fi = box_inverse(f)?;
    let gi = box_inverse(g)?;
    box_conv(&box_conv(&box_conv(f, g)?, &fi)?, &gi)
}

/// Splits `f` as `t ⊠ p` with `t` the first-order (torus) part and `p`
/// unipotent. The recomposition is exact.
pub fn torus_factor(f: &NcSeries) -> Result<(NcSeries, NcSeries), ConvError> {
    if !is_group_element(f) {
        return Err(ConvError::NotInvertible);
    }
    let mut t = NcSeries::zero(f.s(), f.maxdeg());
    for i in 1..=f.s() {
        t.set_coeff(Word::letter(i), f.coeff_unchecked(&Word::letter(i)))?;
    }
    let p = box_conv(&box_inverse(&t)?, f)?;
    debug_assert!(is_unipotent_element(&p));
    Ok((t, p))
}

/// Convenience: `n`-fold `⊠`-power (n >= 1).
pub fn box_power(f: &NcSeries, n: u32) -> Result<NcSeries, ConvError> {
    assert!(n >= 1);
    let mut acc = f.clone();
    for _ in 1..n {
        acc = box_conv(&acc, f)?;
    }
    Ok(acc)
}

/// `2 z_1 + ... `-style helper used in tests: unit scaled per letter.
pub fn diagonal(s: u32, maxdeg: u32, values: &[Rational]) -> NcSeries {
    assert_eq!(values.len(), s as usize);
    let mut f = NcSeries::zero(s, maxdeg);
    for i in 1..=s {
        f.set_coeff(Word::letter(i), values[(i - 1) as usize].clone())
            .expect("letter in range");
    }
    f
}
