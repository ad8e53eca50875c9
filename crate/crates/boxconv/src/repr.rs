//! Faithful matrix representations of the truncated groups.
//!
//! The representation is the right-translation action `p ↦ p(· ⊠ f)` on a
//! finite-dimensional slice of the coordinate algebra. On a generator,
//!
//! ```text
//! ρ(f) X̄_w = Σ_{π ∈ NC(|w|)} X̄_{w,π} · (X̄_{w,K(π)} at f) ,
//! ```
//!
//! extended multiplicatively to monomials; the matrix is read off in a
//! degree-sorted monomial basis, with columns holding the images. For
//! unipotent `f` the reduced slice of weighted degree `<= D` is invariant:
//! restriction to a block never raises the weighted degree, so the matrix is
//! upper unitriangular and every coefficient `f_w` with `|w| - 1 <= D` sits
//! in the constants row of the column of `X̄_w`.
//!
//! For group elements with general first-order part the reduced quotient
//! collapses the torus, so the S-transform acts on the full-variant
//! monomials graded by total letter count instead; there the torus character
//! matrix is diagonal and the translation action is letter-homogeneous,
//! which makes `f = t ⊠ p ↦ diag(t) · ρ(p)` multiplicative.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::conv::{
    is_unipotent_element, moments_from_cumulants, torus_factor, ConvError,
};
use crate::hopf::{block_monomial, CoordPoly, Monomial};
use crate::ncpart::NcCache;
use crate::onedim::{s_v_transform, OneDimError, PowerSeries1};
use crate::rational::{one, Rational};
use crate::series::{words_up_to, NcSeries, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReprError {
    /// The input must lie in the unipotent subgroup.
    NotUnipotent,
    /// The degree bound must be at least 1.
    BadBound,
    /// Matrix dimensions do not match.
    DimensionMismatch,
    Conv(ConvError),
    OneDim(OneDimError),
}

impl core::fmt::Display for ReprError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReprError::NotUnipotent => write!(f, "series is not in the unipotent subgroup"),
            ReprError::BadBound => write!(f, "degree bound must be at least 1"),
            ReprError::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            ReprError::Conv(e) => write!(f, "{e}"),
            ReprError::OneDim(e) => write!(f, "{e}"),
        }
    }
}

impl From<ConvError> for ReprError {
    fn from(e: ConvError) -> Self {
        ReprError::Conv(e)
    }
}

impl From<OneDimError> for ReprError {
    fn from(e: OneDimError) -> Self {
        ReprError::OneDim(e)
    }
}

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(dim: usize) -> Self {
        RationalMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RationalMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.data[row * self.dim + col] = v;
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, ReprError> {
        if self.dim != other.dim {
            return Err(ReprError::DimensionMismatch);
        }
        let n = self.dim;
        let mut out = RationalMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix, ReprError> {
        if self.dim != other.dim {
            return Err(ReprError::DimensionMismatch);
        }
        let mut out = self.clone();
        for i in 0..self.dim * self.dim {
            out.data[i] -= other.data[i].clone();
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self == &RationalMatrix::identity(self.dim)
    }

    pub fn is_upper_triangular(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j).clone() / p.clone();
                a.set(col, j, v);
                let v = inv.get(col, j).clone() / p.clone();
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j).clone() - factor.clone() * a.get(col, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j).clone() - factor.clone() * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }
}

/// Ordered monomial basis of a coordinate-algebra slice, ascending by
/// weighted degree with ties broken by the canonical monomial key. The first
/// element is always the constant monomial.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    reduced: bool,
    monos: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialBasis {
    /// Reduced-variant monomials (generators `X̄_w`, `|w| >= 2`) of weighted
    /// degree at most `bound`.
    pub fn reduced(s: u32, maxdeg: u32, bound: u32) -> Self {
        let gens: Vec<Word> = words_up_to(s, maxdeg)
            .into_iter()
            .filter(|w| w.len() >= 2)
            .collect();
        let weights: Vec<usize> = gens.iter().map(|w| w.len() - 1).collect();
        Self::assemble(true, &gens, &weights, bound as usize)
    }

    /// Full-variant monomials (generators `X_w`, `|w| >= 1`, positive
    /// exponents) of total letter count at most `letters`.
    pub fn full_letters(s: u32, maxdeg: u32, letters: u32) -> Self {
        let gens: Vec<Word> = words_up_to(s, maxdeg.min(letters)).into_iter().collect();
        let weights: Vec<usize> = gens.iter().map(|w| w.len()).collect();
        Self::assemble(false, &gens, &weights, letters as usize)
    }

    fn assemble(reduced: bool, gens: &[Word], weights: &[usize], bound: usize) -> Self {
        let mut monos = vec![Monomial::unit()];
        let mut partial: Vec<(usize, Monomial)> = vec![(0, Monomial::unit())];
        for (g, &wt) in gens.iter().zip(weights) {
            let mut next = Vec::new();
            for (used, m) in &partial {
                let mut acc = m.clone();
                let mut total = *used;
                next.push((total, acc.clone()));
                while total + wt <= bound {
                    acc = acc.mul(&Monomial::gen(g.clone()));
                    total += wt;
                    next.push((total, acc.clone()));
                    monos.push(acc.clone());
                }
            }
            partial = next;
        }
        monos.sort_by(|a, b| a.wdeg().cmp(&b.wdeg()).then_with(|| a.cmp(b)));
        monos.dedup();
        let index = monos
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonomialBasis {
            reduced,
            monos,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Canonical text keys, the basis manifest of the serialized matrix.
    pub fn render_keys(&self) -> Vec<String> {
        self.monos.iter().map(|m| m.render(self.reduced)).collect()
    }
}

/// Image of the generator for `w` under right translation by `f`:
/// `Σ_π X_{w,π} · (X_{w,K(π)} at f)`, in the chosen variant.
fn translate_generator(
    w: &Word,
    f: &NcSeries,
    reduced: bool,
    cache: &mut NcCache,
) -> CoordPoly {
    let level = cache.level(w.len()).expect("degree within cap");
    let mut out = CoordPoly::zero();
    for (p, k) in level.partitions.iter().zip(&level.complements) {
        let value = block_monomial(w, k, reduced)
            .eval(f)
            .expect("positive exponents only");
        if value.is_zero() {
            continue;
        }
        out.add_term(block_monomial(w, p, reduced), value);
    }
    out
}

fn translation_matrix(
    f: &NcSeries,
    basis: &MonomialBasis,
) -> RationalMatrix {
    let mut cache = NcCache::new();
    let mut gen_images: BTreeMap<Word, CoordPoly> = BTreeMap::new();
    let mut out = RationalMatrix::zero(basis.len());
    for (col, m) in basis.monomials().iter().enumerate() {
        let mut image = CoordPoly::one();
        for (w, e) in m.factors() {
            debug_assert!(e > 0);
            let g = gen_images
                .entry(w.clone())
                .or_insert_with(|| translate_generator(w, f, basis.reduced, &mut cache))
                .clone();
            for _ in 0..e {
                image = image.mul(&g);
            }
        }
        for (mono, c) in image.terms() {
            let row = basis
                .index_of(mono)
                .expect("translation preserves the slice");
            out.set(row, col, c.clone());
        }
    }
    out
}

/// The right-translation representation of a unipotent element on the
/// reduced slice of weighted degree `<= bound`. Columns hold images; the
/// constants row of a generator column recovers the coefficient `f_w`.
pub fn build_rep(f: &NcSeries, bound: u32) -> Result<RationalMatrix, ReprError> {
    if bound < 1 {
        return Err(ReprError::BadBound);
    }
    if !is_unipotent_element(f) {
        return Err(ReprError::NotUnipotent);
    }
    let basis = MonomialBasis::reduced(f.s(), f.maxdeg(), bound);
    Ok(translation_matrix(f, &basis))
}

/// The reduced basis used by [`build_rep`]; exposed for serialization.
pub fn build_rep_basis(s: u32, maxdeg: u32, bound: u32) -> MonomialBasis {
    MonomialBasis::reduced(s, maxdeg, bound)
}

/// Default degree bound: every input coefficient recoverable.
pub fn default_bound(maxdeg: u32) -> u32 {
    maxdeg.saturating_sub(1).max(1)
}

/// The diagonal torus character matrix on the full-variant basis of letter
/// count `<= bound + 1`: a monomial is scaled by the product of `t_i` over
/// its letters.
pub fn build_torus_rep(t: &NcSeries, bound: u32) -> Result<RationalMatrix, ReprError> {
    if bound < 1 {
        return Err(ReprError::BadBound);
    }
    if !crate::conv::is_group_element(t) {
        return Err(ReprError::Conv(ConvError::NotInvertible));
    }
    let basis = s_transform_basis(t.s(), t.maxdeg(), bound);
    let mut out = RationalMatrix::zero(basis.len());
    for (i, m) in basis.monomials().iter().enumerate() {
        let mut chi = one();
        for (letter, mult) in m.letter_multiplicities(t.s()).iter().enumerate() {
            let ti = t.coeff_unchecked(&Word::letter(letter as u32 + 1));
            for _ in 0..*mult {
                chi *= ti.clone();
            }
        }
        out.set(i, i, chi);
    }
    Ok(out)
}

/// The basis carrying [`s_transform`] and [`build_torus_rep`]: full-variant
/// monomials with at most `bound + 1` letters in total.
pub fn s_transform_basis(s: u32, maxdeg: u32, bound: u32) -> MonomialBasis {
    MonomialBasis::full_letters(s, maxdeg, bound + 1)
}

/// The S-transform of a group element: split `f = t ⊠ p` into torus and
/// unipotent parts and compose the torus character matrix with the
/// translation matrix of `p` on the full-variant basis. Multiplicative,
/// upper-triangular, with torus characters on the diagonal.
pub fn s_transform(f: &NcSeries, bound: u32) -> Result<RationalMatrix, ReprError> {
    if bound < 1 {
        return Err(ReprError::BadBound);
    }
    let (t, p) = torus_factor(f)?;
    let basis = s_transform_basis(f.s(), f.maxdeg(), bound);
    let torus = build_torus_rep(&t, bound)?;
    let trans = translation_matrix(&p, &basis);
    torus.mul(&trans)
}

/// Unipotency certificate: `(M - I)^dim = 0`.
pub fn certify_unipotent(m: &RationalMatrix) -> bool {
    let n = m.dim();
    let nil = match m.sub(&RationalMatrix::identity(n)) {
        Ok(x) => x,
        Err(_) => return false,
    };
    let mut power = nil.clone();
    for _ in 0..n {
        if power.is_zero() {
            return true;
        }
        power = power.mul(&nil).expect("same dimension");
    }
    power.is_zero()
}

/// Nilpotency index of `M - I`: least `k` with `(M - I)^k = 0`, or `None`
/// if `M` is not unipotent.
pub fn nilpotency_index(m: &RationalMatrix) -> Option<usize> {
    let n = m.dim();
    let nil = m.sub(&RationalMatrix::identity(n)).ok()?;
    let mut power = RationalMatrix::identity(n);
    for k in 0..=n {
        if power.is_zero() {
            return Some(k);
        }
        power = power.mul(&nil).ok()?;
    }
    None
}

/// Triangularity certificate in the degree-sorted basis: all entries below
/// the diagonal vanish. The basis argument pins the dimension the matrix is
/// expected to act on.
pub fn certify_triangular(m: &RationalMatrix, basis: &MonomialBasis) -> bool {
    m.dim() == basis.len() && m.is_upper_triangular()
}

/// The one-variable S-transform matrix of a cumulant series with first
/// coefficient 1: top-left entry 1, the rest of the first row the
/// coefficients of `d/dz log(S_V)` up to the truncation, identity elsewhere.
pub fn one_dim_s_matrix(a: &NcSeries) -> Result<RationalMatrix, ReprError> {
    if a.s() != 1 {
        return Err(ReprError::Conv(ConvError::Series(
            crate::series::SeriesError::AlphabetMismatch {
                left: a.s(),
                right: 1,
            },
        )));
    }
    if !is_unipotent_element(a) {
        return Err(ReprError::NotUnipotent);
    }
    let n = a.maxdeg() as usize;
    let moments = moments_from_cumulants(a)?;
    let m_ps = PowerSeries1::from_nc_series(&moments);
    let sv = s_v_transform(&m_ps)?;
    let q = sv.log()?.derivative();
    let mut out = RationalMatrix::identity(n);
    for j in 1..n {
        out.set(0, j, q.coeff(j - 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conv::{box_conv, box_inverse, unit};
    use crate::fixtures::{random_unipotent, Rng};
    use crate::rational::{rat, rat_int};

    #[test]
    fn matrix_basics() {
        let mut m = RationalMatrix::identity(3);
        m.set(0, 2, rat(5, 2));
        assert!(m.is_upper_triangular());
        assert!(certify_unipotent(&m));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
        let mut lower = RationalMatrix::identity(2);
        lower.set(1, 0, rat_int(1));
        assert!(!lower.is_upper_triangular());
    }

    #[test]
    fn reduced_basis_shape() {
        let basis = MonomialBasis::reduced(2, 4, 3);
        assert!(basis.monomials()[0].is_unit());
        // ascending weighted degree
        for pair in basis.monomials().windows(2) {
            assert!(pair[0].wdeg() <= pair[1].wdeg());
        }
        // s=2, maxdeg=4, D=3: 1 + 4 + 18 + 68 monomials
        assert_eq!(basis.len(), 91);
        let keys = basis.render_keys();
        assert_eq!(keys[0], "1");
        assert!(keys.iter().any(|k| k == "Xbar[1,1]^3"));
    }

    #[test]
    fn reduced_degree_zero_part_is_constants_only() {
        // the zero-weight slice of the reduced algebra is spanned by 1
        let basis = MonomialBasis::reduced(2, 4, 3);
        let zero_weight: Vec<_> = basis
            .monomials()
            .iter()
            .filter(|m| m.wdeg() == 0)
            .collect();
        assert_eq!(zero_weight.len(), 1);
        assert!(zero_weight[0].is_unit());
    }

    #[test]
    fn identity_representation() {
        let e = unit(2, 3);
        let m = build_rep(&e, 2).unwrap();
        assert!(m.is_identity());
        let t = build_torus_rep(&e, 2).unwrap();
        assert!(t.is_identity());
        let s = s_transform(&e, 2).unwrap();
        assert!(s.is_identity());
    }

    #[test]
    fn rep_rejects_bad_inputs() {
        let f = crate::conv::diagonal(2, 3, &[rat_int(2), rat_int(1)]);
        assert!(matches!(build_rep(&f, 2), Err(ReprError::NotUnipotent)));
        assert!(matches!(
            build_rep(&unit(2, 3), 0),
            Err(ReprError::BadBound)
        ));
    }

    #[test]
    fn coefficient_recovery_in_constants_row() {
        let mut rng = Rng::new(23);
        let f = random_unipotent(&mut rng, 2, 3);
        let bound = default_bound(3);
        let basis = build_rep_basis(2, 3, bound);
        let m = build_rep(&f, bound).unwrap();
        for w in words_up_to(2, 3).into_iter().filter(|w| w.len() >= 2) {
            let col = basis.index_of(&Monomial::gen(w.clone())).unwrap();
            assert_eq!(m.get(0, col), &f.coeff_unchecked(&w));
        }
    }

    #[test]
    fn homomorphism_and_unipotency() {
        let mut rng = Rng::new(5);
        let f = random_unipotent(&mut rng, 2, 3);
        let g = random_unipotent(&mut rng, 2, 3);
        let bound = 2;
        let mf = build_rep(&f, bound).unwrap();
        let mg = build_rep(&g, bound).unwrap();
        let mfg = build_rep(&box_conv(&f, &g).unwrap(), bound).unwrap();
        assert_eq!(mfg, mf.mul(&mg).unwrap());
        assert!(mf.is_upper_triangular());
        assert!(certify_unipotent(&mf));
        assert!(nilpotency_index(&mf).unwrap() <= bound as usize + 1);
        // matrix inverse matches the group inverse
        let minv = build_rep(&box_inverse(&f).unwrap(), bound).unwrap();
        assert_eq!(mf.inverse().unwrap(), minv);
    }

    #[test]
    fn s_transform_multiplicative_with_torus_parts() {
        let mut rng = Rng::new(9);
        let mut f = crate::fixtures::random_group_element(&mut rng, 2, 2);
        let mut g = crate::fixtures::random_group_element(&mut rng, 2, 2);
        // give the fixtures genuinely non-unit torus parts
        f.set_coeff(Word::letter(1), rat_int(2)).unwrap();
        g.set_coeff(Word::letter(2), rat(-1, 3)).unwrap();
        let bound = 1;
        let sf = s_transform(&f, bound).unwrap();
        let sg = s_transform(&g, bound).unwrap();
        let sfg = s_transform(&box_conv(&f, &g).unwrap(), bound).unwrap();
        assert_eq!(sfg, sf.mul(&sg).unwrap());
        assert!(sf.is_upper_triangular());
        // diagonal entries are torus characters: monomials in the
        // first-order coefficients
        let basis = s_transform_basis(2, 2, bound);
        let f1 = f.coeff_unchecked(&Word::letter(1));
        let idx = basis
            .index_of(&Monomial::gen(Word::letter(1)).pow(2))
            .unwrap();
        assert_eq!(sf.get(idx, idx), &(f1.clone() * f1));
    }

    #[test]
    fn one_dim_matrix_shape_and_additivity() {
        // identity distribution: S_V = 1, so the first-row tail vanishes
        let e = unit(1, 5);
        let m = one_dim_s_matrix(&e).unwrap();
        assert!(m.is_identity());
        // unipotent by construction
        let mut rng = Rng::new(31);
        let a = random_unipotent(&mut rng, 1, 5);
        let b = random_unipotent(&mut rng, 1, 5);
        let ma = one_dim_s_matrix(&a).unwrap();
        assert!(certify_unipotent(&ma));
        let mb = one_dim_s_matrix(&b).unwrap();
        let mab = one_dim_s_matrix(&box_conv(&a, &b).unwrap()).unwrap();
        // log turns the product into a sum of first-row tails
        for j in 1..ma.dim() {
            assert_eq!(
                mab.get(0, j).clone(),
                ma.get(0, j).clone() + mb.get(0, j)
            );
        }
        let bad = crate::conv::diagonal(1, 3, &[rat_int(2)]);
        assert!(one_dim_s_matrix(&bad).is_err());
    }
}
