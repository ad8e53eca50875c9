//! The coordinate Hopf algebra of the boxed convolution group.
//!
//! Generators are the coefficient functionals `X_w`; the coproduct is dual
//! to `⊠`,
//!
//! ```text
//! Δ(X_w) = Σ_{π ∈ NC(|w|)} X_{w,π} ⊗ X_{w,K(π)} ,
//! ```
//!
//! the counit evaluates at the group unit (`ε(X_i) = 1`, `ε(X_w) = 0` for
//! `|w| >= 2`) and the antipode is the recursion
//!
//! ```text
//! S(X_w) = -(X_{i_1}⁻¹ ⋯ X_{i_n}⁻¹) · Σ_{π ≠ 0_n} X_{w,π} · S(X_{w,K(π)}) ,
//! ```
//!
//! with `S(X_i) = X_i⁻¹`. Two variants coexist: the full one over
//! `k[X_1^{±1}, ..., X_s^{±1}, X_w]`, with Laurent exponents on the
//! first-order generators, and the reduced one over `k[X̄_w : |w| >= 2]`
//! obtained by substituting `X_i = 1`. The reduced coproduct read as a
//! two-variable series is the formal group law; its bilinear part defines
//! the Lie bracket.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::ncpart::{NcCache, NcPartition};
use crate::rational::{one, rat_int, Rational};
use crate::series::{restrict_word, words_up_to, NcSeries, Word};

/// Errors from symbolic computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfError {
    /// Word empty or beyond the truncation degree.
    WordOutOfRange,
    /// The reduced variant requires `|w| >= 2`.
    NotReduced,
    /// Evaluation hit `X_i⁻¹` at a series with zero first-order coefficient.
    NotInvertible,
}

impl core::fmt::Display for HopfError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HopfError::WordOutOfRange => write!(f, "word outside degree range"),
            HopfError::NotReduced => write!(f, "reduced variant requires |w| >= 2"),
            HopfError::NotInvertible => write!(f, "evaluation requires invertible coefficients"),
        }
    }
}

/// A commutative monomial in the generators: word -> integer exponent.
/// Exponents are never zero; only first-order generators may carry negative
/// (Laurent) exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct Monomial(BTreeMap<Word, i32>);

impl Monomial {
    /// The constant monomial `1`.
    pub fn unit() -> Self {
        Monomial(BTreeMap::new())
    }

    /// Single generator `X_w`.
    pub fn gen(w: Word) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, 1);
        Monomial(m)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Word, i32)> {
        self.0.iter().map(|(w, &e)| (w, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (w, e) in &other.0 {
            let entry = out.entry(w.clone()).or_insert(0);
            *entry += e;
            if *entry == 0 {
                out.remove(w);
            }
        }
        Monomial(out)
    }

    pub fn pow(&self, e: i32) -> Monomial {
        if e == 0 {
            return Monomial::unit();
        }
        let mut out = BTreeMap::new();
        for (w, &k) in &self.0 {
            out.insert(w.clone(), k * e);
        }
        Monomial(out)
    }

    /// Weighted degree `Σ exp · (|w| - 1)`; first-order generators (and
    /// their inverses) contribute zero.
    pub fn wdeg(&self) -> i64 {
        self.0
            .iter()
            .map(|(w, &e)| (w.len() as i64 - 1) * e as i64)
            .sum()
    }

    /// Number of generator factors of length >= 2, with multiplicity.
    pub fn higher_factor_count(&self) -> i64 {
        self.0
            .iter()
            .filter(|(w, _)| w.len() >= 2)
            .map(|(_, &e)| e as i64)
            .sum()
    }

    /// Total multiplicity of each alphabet letter across all factors;
    /// the torus character exponents.
    pub fn letter_multiplicities(&self, s: u32) -> Vec<i64> {
        let mut mult = alloc::vec![0i64; s as usize];
        for (w, &e) in &self.0 {
            for &l in w.letters() {
                mult[(l - 1) as usize] += e as i64;
            }
        }
        mult
    }

    /// Substitutes `X_i = 1`: drops first-order factors.
    pub fn reduce(&self) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|(w, _)| w.len() >= 2)
                .map(|(w, &e)| (w.clone(), e))
                .collect(),
        )
    }

    /// Value at a series: the product of `f_w^exp` over the factors.
    pub fn eval(&self, f: &NcSeries) -> Result<Rational, HopfError> {
        let mut acc = one();
        for (w, &e) in &self.0 {
            let c = f.coeff_unchecked(w);
            if e >= 0 {
                for _ in 0..e {
                    acc *= c.clone();
                }
            } else {
                if c.is_zero() {
                    return Err(HopfError::NotInvertible);
                }
                for _ in 0..(-e) {
                    acc /= c.clone();
                }
            }
        }
        Ok(acc)
    }

    /// Canonical text: factors in word order, `X[1,2]^2*X[1]^-1`, the
    /// constant monomial as `1`. `reduced` selects the `Xbar` generator name.
    pub fn render(&self, reduced: bool) -> String {
        use core::fmt::Write;
        if self.0.is_empty() {
            return String::from("1");
        }
        let name = if reduced { "Xbar" } else { "X" };
        let mut out = String::new();
        for (i, (w, &e)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            let _ = write!(out, "{name}[");
            for (j, l) in w.letters().iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{l}");
            }
            out.push(']');
            if e != 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }
}

/// A polynomial in the generators with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CoordPoly(BTreeMap<Monomial, Rational>);

impl CoordPoly {
    pub fn zero() -> Self {
        CoordPoly(BTreeMap::new())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = CoordPoly::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn one() -> Self {
        CoordPoly::constant(one())
    }

    pub fn gen(w: Word) -> Self {
        let mut p = CoordPoly::zero();
        p.add_term(Monomial::gen(w), one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, other: &CoordPoly) -> CoordPoly {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CoordPoly) -> CoordPoly {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> CoordPoly {
        if c.is_zero() {
            return CoordPoly::zero();
        }
        CoordPoly(self.0.iter().map(|(m, v)| (m.clone(), c * v)).collect())
    }

    pub fn mul(&self, other: &CoordPoly) -> CoordPoly {
        let mut out = CoordPoly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> CoordPoly {
        let mut out = CoordPoly::zero();
        for (m1, c1) in &self.0 {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    /// Substitutes `X_i = 1` into every term.
    pub fn reduce(&self) -> CoordPoly {
        let mut out = CoordPoly::zero();
        for (m, c) in &self.0 {
            out.add_term(m.reduce(), c.clone());
        }
        out
    }

    pub fn eval(&self, f: &NcSeries) -> Result<Rational, HopfError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.0 {
            acc += c * m.eval(f)?;
        }
        Ok(acc)
    }

    /// Canonical text with terms in monomial order.
    pub fn render(&self, reduced: bool) -> String {
        render_terms(self.0.iter().map(|(m, c)| (m.render(reduced), c)))
    }
}

/// A sum of two-leg tensors `p ⊗ q` with rational coefficients, merged on
/// equal leg pairs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorPoly(BTreeMap<(Monomial, Monomial), Rational>);

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Rational)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.0.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in &other.0 {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l1, r1), c1) in &self.0 {
            for ((l2, r2), c2) in &other.0 {
                out.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TensorPoly {
        let mut out = TensorPoly::zero();
        out.add_term(Monomial::unit(), Monomial::unit(), one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `X_i = 1` in both legs.
    pub fn reduce(&self) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l, r), c) in &self.0 {
            out.add_term(l.reduce(), r.reduce(), c.clone());
        }
        out
    }

    /// Evaluation at a pair of series: left legs at `f`, right legs at `g`.
    pub fn eval(&self, f: &NcSeries, g: &NcSeries) -> Result<Rational, HopfError> {
        let mut acc = Rational::zero();
        for ((l, r), c) in &self.0 {
            acc += c * l.eval(f)? * r.eval(g)?;
        }
        Ok(acc)
    }

    /// Canonical text `lhs (x) rhs`, terms in leg order.
    pub fn render(&self, reduced: bool) -> String {
        render_terms(self.0.iter().map(|((l, r), c)| {
            let mut s = l.render(reduced);
            s.push_str(" (x) ");
            s.push_str(&r.render(reduced));
            (s, c)
        }))
    }
}

fn render_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    use core::fmt::Write;
    let mut out = String::new();
    let mut first = true;
    for (body, c) in terms {
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.abs();
        if !a.is_one() || body == "1" {
            let _ = write!(out, "{a}");
            if body != "1" {
                out.push('*');
            }
        }
        if body != "1" {
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The monomial `X_{w,π}`: one generator per block, at the subword of `w`
/// along that block. In the reduced variant singleton blocks contribute the
/// identity.
pub fn block_monomial(w: &Word, p: &NcPartition, reduced: bool) -> Monomial {
    let mut m = Monomial::unit();
    for block in p.blocks() {
        if reduced && block.len() == 1 {
            continue;
        }
        let sub = restrict_word(w, block).expect("block within word");
        m = m.mul(&Monomial::gen(sub));
    }
    m
}

/// `Δ(X_w)` in the full variant.
pub fn coproduct(w: &Word, maxdeg: u32) -> Result<TensorPoly, HopfError> {
    if w.is_empty() || w.len() > maxdeg as usize {
        return Err(HopfError::WordOutOfRange);
    }
    let mut cache = NcCache::new();
    let level = cache.level(w.len()).map_err(|_| HopfError::WordOutOfRange)?;
    let mut out = TensorPoly::zero();
    for (p, k) in level.partitions.iter().zip(&level.complements) {
        out.add_term(
            block_monomial(w, p, false),
            block_monomial(w, k, false),
            one(),
        );
    }
    Ok(out)
}

/// `Δ` extended to polynomials as an algebra map.
pub fn coproduct_poly(p: &CoordPoly, maxdeg: u32) -> Result<TensorPoly, HopfError> {
    let mut out = TensorPoly::zero();
    for (m, c) in p.terms() {
        let mut acc = TensorPoly::zero();
        acc.add_term(Monomial::unit(), Monomial::unit(), c.clone());
        for (w, e) in m.factors() {
            let dw = coproduct(w, maxdeg)?;
            if e >= 0 {
                acc = acc.mul(&dw.pow(e as u32));
            } else {
                // only first-order generators carry inverses; they are
                // group-like, so the inverse tensors leg-wise
                debug_assert_eq!(w.len(), 1);
                let mut inv = TensorPoly::zero();
                inv.add_term(
                    Monomial::gen(w.clone()).pow(-1),
                    Monomial::gen(w.clone()).pow(-1),
                    one(),
                );
                acc = acc.mul(&inv.pow((-e) as u32));
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// `ε`: kills every generator of length >= 2, sends `X_i^{±1}` to 1.
pub fn counit(p: &CoordPoly) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in p.terms() {
        if m.factors().all(|(w, _)| w.len() == 1) {
            acc += c;
        }
    }
    acc
}

/// The antipode `S(X_w)` in the full variant, by the Kreweras recursion;
/// subword values are memoized within one call.
pub fn antipode(w: &Word) -> CoordPoly {
    let mut memo: BTreeMap<Word, CoordPoly> = BTreeMap::new();
    let mut cache = NcCache::new();
    antipode_memo(w, &mut memo, &mut cache)
}

fn antipode_memo(
    w: &Word,
    memo: &mut BTreeMap<Word, CoordPoly>,
    cache: &mut NcCache,
) -> CoordPoly {
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let n = w.len();
    assert!(n >= 1, "antipode of the empty word");
    let result = if n == 1 {
        let mut p = CoordPoly::zero();
        p.add_term(Monomial::gen(w.clone()).pow(-1), one());
        p
    } else {
        let level = cache.level(n).expect("within cap");
        let mut sum = CoordPoly::zero();
        for (p, k) in level.partitions.iter().zip(&level.complements) {
            if p.num_blocks() == n {
                continue; // pi = 0_n excluded by the recursion
            }
            // S applied to the complement monomial, factor by factor; every
            // complement block is shorter than w, so the recursion terminates
            let mut s_part = CoordPoly::one();
            for block in k.blocks() {
                let sub = restrict_word(w, block).expect("block within word");
                s_part = s_part.mul(&antipode_memo(&sub, memo, cache));
            }
            sum = sum.add(&s_part.mul_monomial(&block_monomial(w, p, false), &one()));
        }
        // leading Laurent factor -(X_{i_1}^{-1} ... X_{i_n}^{-1})
        let mut lead = Monomial::unit();
        for &l in w.letters() {
            lead = lead.mul(&Monomial::gen(Word::letter(l)).pow(-1));
        }
        sum.mul_monomial(&lead, &rat_int(-1))
    };
    memo.insert(w.clone(), result.clone());
    result
}

/// `S` extended to polynomials as an algebra map.
pub fn antipode_poly(p: &CoordPoly) -> CoordPoly {
    let mut out = CoordPoly::zero();
    for (m, c) in p.terms() {
        let mut acc = CoordPoly::constant(c.clone());
        for (w, e) in m.factors() {
            let sw = antipode(w);
            if e >= 0 {
                for _ in 0..e {
                    acc = acc.mul(&sw);
                }
            } else {
                // S(X_i^{-1}) = X_i, since S(X_i) = X_i^{-1}
                debug_assert_eq!(w.len(), 1);
                for _ in 0..(-e) {
                    acc = acc.mul(&CoordPoly::gen(w.clone()));
                }
            }
        }
        out = out.add(&acc);
    }
    out
}

/// `Δ(X̄_w)` in the reduced variant (`|w| >= 2`).
pub fn reduced_coproduct(w: &Word, maxdeg: u32) -> Result<TensorPoly, HopfError> {
    if w.len() < 2 {
        return Err(HopfError::NotReduced);
    }
    Ok(coproduct(w, maxdeg)?.reduce())
}

/// `S(X̄_w)` in the reduced variant.
pub fn reduced_antipode(w: &Word) -> Result<CoordPoly, HopfError> {
    if w.len() < 2 {
        return Err(HopfError::NotReduced);
    }
    Ok(antipode(w).reduce())
}

/// The formal group law component `F_w(X, Y)`: the reduced coproduct read as
/// a series in two families of variables (left legs in `X̄`, right legs in
/// `Ȳ`).
pub fn formal_group_law(w: &Word, maxdeg: u32) -> Result<TensorPoly, HopfError> {
    reduced_coproduct(w, maxdeg)
}

/// The bilinear part `B_w(X, Y)` of the formal group law: terms whose legs
/// are single higher generators (degree one on each side).
pub fn bilinear_part(w: &Word, maxdeg: u32) -> Result<TensorPoly, HopfError> {
    let fgl = formal_group_law(w, maxdeg)?;
    let mut out = TensorPoly::zero();
    for ((l, r), c) in fgl.terms() {
        if l.higher_factor_count() == 1 && r.higher_factor_count() == 1 {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Structure constants of the Lie bracket `[X̄_u, X̄_v]`: for each word `w`
/// the coefficient of `X̄_u ⊗ Ȳ_v` in `B_w` minus that of `X̄_v ⊗ Ȳ_u`.
/// Only nonzero entries are returned.
pub fn lie_bracket(
    u: &Word,
    v: &Word,
    s: u32,
    maxdeg: u32,
) -> Result<BTreeMap<Word, Rational>, HopfError> {
    if u.len() < 2 || v.len() < 2 {
        return Err(HopfError::NotReduced);
    }
    let mu = Monomial::gen(u.clone());
    let mv = Monomial::gen(v.clone());
    let mut out = BTreeMap::new();
    for w in words_up_to(s, maxdeg) {
        if w.len() < 2 {
            continue;
        }
        let b = bilinear_part(&w, maxdeg)?;
        let mut c = Rational::zero();
        for ((l, r), coeff) in b.terms() {
            if l == &mu && r == &mv {
                c += coeff;
            }
            if l == &mv && r == &mu {
                c -= coeff;
            }
        }
        if !c.is_zero() {
            out.insert(w, c);
        }
    }
    Ok(out)
}

/// Coassociativity `(Δ ⊗ id)Δ(X_w) = (id ⊗ Δ)Δ(X_w)` at the truncation.
pub fn coassociativity_holds(w: &Word, maxdeg: u32) -> Result<bool, HopfError> {
    type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Rational>;
    fn add3(t: &mut Tensor3, key: (Monomial, Monomial, Monomial), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = t.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            t.remove(&key);
        }
    }
    let dw = coproduct(w, maxdeg)?;
    let mut left: Tensor3 = BTreeMap::new();
    let mut right: Tensor3 = BTreeMap::new();
    for ((a, b), c) in dw.terms() {
        let da = coproduct_poly(&poly_of(a), maxdeg)?;
        for ((x, y), d) in da.terms() {
            add3(&mut left, (x.clone(), y.clone(), b.clone()), c * d);
        }
        let db = coproduct_poly(&poly_of(b), maxdeg)?;
        for ((x, y), d) in db.terms() {
            add3(&mut right, (a.clone(), x.clone(), y.clone()), c * d);
        }
    }
    Ok(left == right)
}

/// Counit law `(ε ⊗ id)Δ(X_w) = X_w = (id ⊗ ε)Δ(X_w)`.
pub fn counit_law_holds(w: &Word, maxdeg: u32) -> Result<bool, HopfError> {
    let dw = coproduct(w, maxdeg)?;
    let mut left = CoordPoly::zero();
    let mut right = CoordPoly::zero();
    for ((a, b), c) in dw.terms() {
        left = left.add(&poly_of(b).scale(&(c * counit(&poly_of(a)))));
        right = right.add(&poly_of(a).scale(&(c * counit(&poly_of(b)))));
    }
    let xw = CoordPoly::gen(w.clone());
    Ok(left == xw && right == xw)
}

/// Antipode law `μ(S ⊗ id)Δ(X_w) = η(ε(X_w)) = μ(id ⊗ S)Δ(X_w)`.
pub fn antipode_law_holds(w: &Word, maxdeg: u32) -> Result<bool, HopfError> {
    let dw = coproduct(w, maxdeg)?;
    let mut left = CoordPoly::zero();
    let mut right = CoordPoly::zero();
    for ((a, b), c) in dw.terms() {
        left = left.add(&antipode_poly(&poly_of(a)).mul(&poly_of(b)).scale(c));
        right = right.add(&poly_of(a).mul(&antipode_poly(&poly_of(b))).scale(c));
    }
    let target = CoordPoly::constant(counit(&CoordPoly::gen(w.clone())));
    Ok(left == target && right == target)
}

fn poly_of(m: &Monomial) -> CoordPoly {
    let mut p = CoordPoly::zero();
    p.add_term(m.clone(), one());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conv::{box_conv, box_inverse, unit};
    use crate::fixtures::{random_group_element, Rng};
    use alloc::vec;

    fn w(letters: &[u32]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn coproduct_group_like_letter() {
        let d = coproduct(&w(&[1]), 4).unwrap();
        assert_eq!(d.num_terms(), 1);
        assert_eq!(d.render(false), "X[1] (x) X[1]");
    }

    #[test]
    fn coproduct_length_two() {
        let d = coproduct(&w(&[1, 2]), 4).unwrap();
        // X_{12} (x) X_1 X_2 + X_1 X_2 (x) X_{12}
        assert_eq!(d.num_terms(), 2);
        let mut want = TensorPoly::zero();
        want.add_term(
            Monomial::gen(w(&[1, 2])),
            Monomial::gen(w(&[1])).mul(&Monomial::gen(w(&[2]))),
            one(),
        );
        want.add_term(
            Monomial::gen(w(&[1])).mul(&Monomial::gen(w(&[2]))),
            Monomial::gen(w(&[1, 2])),
            one(),
        );
        assert_eq!(d, want);
    }

    #[test]
    fn coproduct_term_counts_are_catalan() {
        assert_eq!(coproduct(&w(&[1, 2, 3]), 4).unwrap().num_terms(), 5);
        assert_eq!(coproduct(&w(&[1, 2, 3, 4]), 4).unwrap().num_terms(), 14);
        assert!(coproduct(&w(&[1, 1, 1]), 2).is_err());
        assert!(coproduct(&w(&[]), 2).is_err());
    }

    #[test]
    fn counit_cases() {
        assert_eq!(counit(&CoordPoly::gen(w(&[1]))), rat_int(1));
        assert_eq!(counit(&CoordPoly::gen(w(&[1, 2]))), rat_int(0));
        // epsilon(X_1 X_{23} + 3) = 3
        let p = CoordPoly::gen(w(&[1]))
            .mul(&CoordPoly::gen(w(&[2, 3])))
            .add(&CoordPoly::constant(rat_int(3)));
        assert_eq!(counit(&p), rat_int(3));
    }

    #[test]
    fn antipode_letter_and_pair() {
        assert_eq!(antipode(&w(&[1])).render(false), "X[1]^-1");
        // S(X_{12}) = -X_1^-1 X_2^-1 X_{12} X_1^-1 X_2^-1
        let s = antipode(&w(&[1, 2]));
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.render(false), "-X[1]^-2*X[2]^-2*X[1,2]");
        // reduced variant: S(Xbar_{12}) = -Xbar_{12}
        assert_eq!(
            reduced_antipode(&w(&[1, 2])).unwrap().render(true),
            "-Xbar[1,2]"
        );
        assert!(reduced_antipode(&w(&[1])).is_err());
    }

    #[test]
    fn reduced_coproduct_examples() {
        // |w| = 2: primitive
        let d = reduced_coproduct(&w(&[1, 2]), 4).unwrap();
        assert_eq!(d.render(true), "1 (x) Xbar[1,2] + Xbar[1,2] (x) 1");
        // |w| = 3: five terms
        let d3 = reduced_coproduct(&w(&[1, 2, 3]), 4).unwrap();
        assert_eq!(d3.num_terms(), 5);
        let txt = d3.render(true);
        assert!(txt.contains("Xbar[2,3] (x) Xbar[1,3]"));
        assert!(txt.contains("Xbar[1,2] (x) Xbar[2,3]"));
        assert!(txt.contains("Xbar[1,3] (x) Xbar[1,2]"));
        assert!(reduced_coproduct(&w(&[1]), 4).is_err());
    }

    #[test]
    fn hopf_axioms_small() {
        for word in [w(&[1]), w(&[2]), w(&[1, 2]), w(&[1, 2, 1]), w(&[2, 1, 1, 2])] {
            assert!(coassociativity_holds(&word, 4).unwrap());
            assert!(counit_law_holds(&word, 4).unwrap());
            assert!(antipode_law_holds(&word, 4).unwrap());
        }
    }

    #[test]
    fn duality_with_group_ops() {
        let mut rng = Rng::new(11);
        let f = random_group_element(&mut rng, 2, 3);
        let g = random_group_element(&mut rng, 2, 3);
        let prod = box_conv(&f, &g).unwrap();
        let inv = box_inverse(&f).unwrap();
        for word in crate::series::words_up_to(2, 3) {
            let d = coproduct(&word, 3).unwrap();
            assert_eq!(d.eval(&f, &g).unwrap(), prod.coeff_unchecked(&word));
            let s = antipode(&word);
            assert_eq!(s.eval(&f).unwrap(), inv.coeff_unchecked(&word));
        }
        // evaluating the antipode requires invertible first-order coefficients
        let zero = NcSeries::zero(2, 3);
        assert!(antipode(&w(&[1, 2])).eval(&zero).is_err());
        // the unit evaluates the antipode to the unit's coefficients
        let e = unit(2, 3);
        assert_eq!(antipode(&w(&[1])).eval(&e).unwrap(), rat_int(1));
    }

    #[test]
    fn grading_of_reduced_coproduct() {
        for word in [w(&[1, 2, 1]), w(&[1, 1, 2, 2]), w(&[2, 1, 2, 1, 1])] {
            let n = word.len() as i64 - 1;
            let d = reduced_coproduct(&word, 5).unwrap();
            for ((l, r), _) in d.terms() {
                assert_eq!(l.wdeg() + r.wdeg(), n);
            }
        }
    }

    #[test]
    fn bilinear_part_examples() {
        // |w| = 2: zero
        assert!(bilinear_part(&w(&[1, 2]), 4).unwrap().is_zero());
        // |w| = 3: the three cyclic terms
        let b = bilinear_part(&w(&[1, 2, 3]), 4).unwrap();
        assert_eq!(b.num_terms(), 3);
        assert_eq!(
            b.render(true),
            "Xbar[1,2] (x) Xbar[2,3] + Xbar[1,3] (x) Xbar[1,2] + Xbar[2,3] (x) Xbar[1,3]"
        );
    }

    #[test]
    fn lie_bracket_dichotomy() {
        // s = 1: abelian up to the tested degree
        for (a, b) in [(2usize, 2usize), (2, 3), (3, 3), (2, 4)] {
            let u = Word::new(vec![1; a]);
            let v = Word::new(vec![1; b]);
            assert!(lie_bracket(&u, &v, 1, 5).unwrap().is_empty());
        }
        // s = 2: a nonzero structure constant at w = (1,2,1)
        let br = lie_bracket(&w(&[1, 1]), &w(&[1, 2]), 2, 3).unwrap();
        assert_eq!(br.get(&w(&[1, 2, 1])), Some(&rat_int(1)));
    }

    #[test]
    fn render_edge_cases() {
        assert_eq!(CoordPoly::zero().render(false), "0");
        assert_eq!(CoordPoly::constant(rat_int(-3)).render(false), "-3");
        let p = CoordPoly::gen(w(&[1, 2])).scale(&crate::rational::rat(3, 2));
        assert_eq!(p.render(false), "3/2*X[1,2]");
    }
}
