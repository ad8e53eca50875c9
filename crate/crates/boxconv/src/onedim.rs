//! One-variable free harmonic analysis.
//!
//! Over one letter, series commute and the group operations become transform
//! calculus: the F-transform `f ↦ f⁻¹(z)/z` and the S_V-transform
//! `m ↦ (1+z)·m⁻¹(z)/z` are multiplicative morphisms into power series with
//! invertible constant term; `LOG = d/dz log ∘ F` linearises the boxed
//! convolution over a ℚ-algebra, with inverse `EXP` given by
//! integrate-exponentiate-invert. `EXP_V`/`LOG_V` conjugate the pair to
//! moment coordinates through right translation by `Zeta`/`Moeb`; the
//! identification of degree-shifted coefficient vectors (`m(z) ↔ m(z)/z`)
//! makes them mutually inverse at every truncation.
//!
//! Everything here needs denominators (integration divides by the degree),
//! which the rational coefficient ring provides by construction.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::conv::{box_conv, moeb, zeta, ConvError};
use crate::hopf::CoordPoly;
use crate::rational::{one, rat_int, Rational};
use crate::series::{NcSeries, Word};

/// Errors from one-variable transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneDimError {
    /// The operation needs a zero constant term.
    ConstantTermNotZero,
    /// The operation needs constant term 1.
    ConstantTermNotOne,
    /// The first-order coefficient must be invertible.
    FirstCoeffZero,
    /// The first-order coefficient must be exactly 1.
    FirstCoeffNotOne,
    /// The truncation degree is too small for the operation.
    DegreeTooSmall,
    Conv(ConvError),
}

impl core::fmt::Display for OneDimError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OneDimError::ConstantTermNotZero => write!(f, "constant term must be zero"),
            OneDimError::ConstantTermNotOne => write!(f, "constant term must be one"),
            OneDimError::FirstCoeffZero => write!(f, "first coefficient must be invertible"),
            OneDimError::FirstCoeffNotOne => write!(f, "first coefficient must be one"),
            OneDimError::DegreeTooSmall => write!(f, "truncation degree too small"),
            OneDimError::Conv(e) => write!(f, "{e}"),
        }
    }
}

impl From<ConvError> for OneDimError {
    fn from(e: ConvError) -> Self {
        OneDimError::Conv(e)
    }
}

/// One-variable power series truncated at `maxdeg`: coefficients
/// `a_0..a_maxdeg`, constant terms allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries1 {
    coeffs: Vec<Rational>,
}

impl PowerSeries1 {
    pub fn zero(maxdeg: u32) -> Self {
        PowerSeries1 {
            coeffs: vec![Rational::zero(); maxdeg as usize + 1],
        }
    }

    /// From `a_0..a_maxdeg`; the vector length fixes the truncation.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "at least the constant coefficient");
        PowerSeries1 { coeffs }
    }

    /// The identity series `z`.
    pub fn z(maxdeg: u32) -> Self {
        assert!(maxdeg >= 1);
        let mut f = PowerSeries1::zero(maxdeg);
        f.coeffs[1] = one();
        f
    }

    pub fn maxdeg(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Coefficient of `z^k`; panics beyond the truncation, where the
    /// coefficient is unknown.
    pub fn coeff(&self, k: usize) -> Rational {
        assert!(
            k < self.coeffs.len(),
            "coefficient {k} beyond truncation {}",
            self.maxdeg()
        );
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, maxdeg: u32) -> PowerSeries1 {
        let n = (maxdeg as usize + 1).min(self.coeffs.len());
        PowerSeries1 {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, other: &PowerSeries1) -> PowerSeries1 {
        let n = self.coeffs.len().min(other.coeffs.len());
        PowerSeries1 {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries1) -> PowerSeries1 {
        let n = self.coeffs.len().min(other.coeffs.len());
        PowerSeries1 {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() - &other.coeffs[i])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries1 {
        PowerSeries1 {
            coeffs: self.coeffs.iter().map(|a| c * a).collect(),
        }
    }

    pub fn mul(&self, other: &PowerSeries1) -> PowerSeries1 {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        PowerSeries1 { coeffs: out }
    }

    /// Termwise derivative; drops one degree.
    pub fn derivative(&self) -> PowerSeries1 {
        if self.coeffs.len() == 1 {
            return PowerSeries1::zero(0);
        }
        PowerSeries1 {
            coeffs: (1..self.coeffs.len())
                .map(|k| rat_int(k as i64) * &self.coeffs[k])
                .collect(),
        }
    }

    /// Termwise antiderivative with constant 0; gains one degree.
    pub fn integrate(&self) -> PowerSeries1 {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = c / rat_int(k as i64 + 1);
        }
        PowerSeries1 { coeffs: out }
    }

    /// Multiplication by `z`; gains one degree.
    pub fn mul_z(&self) -> PowerSeries1 {
        let mut out = vec![Rational::zero()];
        out.extend(self.coeffs.iter().cloned());
        PowerSeries1 { coeffs: out }
    }

    /// Division by `z`; requires a zero constant term, drops one degree.
    pub fn div_z(&self) -> Result<PowerSeries1, OneDimError> {
        if !self.coeffs[0].is_zero() {
            return Err(OneDimError::ConstantTermNotZero);
        }
        if self.coeffs.len() == 1 {
            return Err(OneDimError::DegreeTooSmall);
        }
        Ok(PowerSeries1 {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplicative inverse `1/f`; requires an invertible constant term.
    pub fn recip(&self) -> Result<PowerSeries1, OneDimError> {
        if self.coeffs[0].is_zero() {
            return Err(OneDimError::FirstCoeffZero);
        }
        let n = self.coeffs.len();
        let inv0 = Rational::one() / &self.coeffs[0];
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(PowerSeries1 { coeffs: out })
    }

    /// `log f` for constant term 1: the antiderivative of `f'/f`.
    pub fn log(&self) -> Result<PowerSeries1, OneDimError> {
        if !self.coeffs[0].is_one() {
            return Err(OneDimError::ConstantTermNotOne);
        }
        let logd = self.derivative().mul(&self.recip()?);
        Ok(logd.integrate().truncate(self.maxdeg()))
    }

    /// `exp t` for zero constant term, by the recurrence
    /// `n g_n = Σ_k k t_k g_{n-k}`.
    pub fn exp(&self) -> Result<PowerSeries1, OneDimError> {
        if !self.coeffs[0].is_zero() {
            return Err(OneDimError::ConstantTermNotZero);
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        out[0] = one();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += rat_int(j as i64) * &self.coeffs[j] * &out[k - j];
            }
            out[k] = acc / rat_int(k as i64);
        }
        Ok(PowerSeries1 { coeffs: out })
    }

    /// View of a one-letter cumulant/moment series as a coefficient vector
    /// with zero constant term.
    pub fn from_nc_series(f: &NcSeries) -> PowerSeries1 {
        assert_eq!(f.s(), 1, "one-variable view of a multivariate series");
        let n = f.maxdeg() as usize;
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (w, c) in f.iter() {
            coeffs[w.len()] = c.clone();
        }
        PowerSeries1 { coeffs }
    }

    /// The inverse view; requires a zero constant term.
    pub fn to_nc_series(&self) -> Result<NcSeries, OneDimError> {
        if !self.coeffs[0].is_zero() {
            return Err(OneDimError::ConstantTermNotZero);
        }
        if self.coeffs.len() == 1 {
            return Err(OneDimError::DegreeTooSmall);
        }
        let mut out = NcSeries::zero(1, self.maxdeg());
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.set_coeff(Word::new(vec![1; k]), c.clone())
                .expect("word in range");
        }
        Ok(out)
    }
}

/// Composition `f(g(z))`, truncated at the smaller degree; requires
/// `g(0) = 0` so the substitution is well-defined degree by degree.
pub fn compose(f: &PowerSeries1, g: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    if !g.coeffs[0].is_zero() {
        return Err(OneDimError::ConstantTermNotZero);
    }
    let n = f.coeffs.len().min(g.coeffs.len());
    // Horner from the top coefficient down
    let mut acc = PowerSeries1::zero(n as u32 - 1);
    for k in (0..n).rev() {
        acc = acc.mul(g);
        acc.coeffs[0] += &f.coeffs[k];
    }
    Ok(acc)
}

/// Compositional inverse: `h` with `f(h(z)) = h(f(z)) = z` up to the
/// truncation, solved degree by degree. Requires `f(0) = 0` and `f_1`
/// invertible.
pub fn comp_inverse(f: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    if !f.coeffs[0].is_zero() {
        return Err(OneDimError::ConstantTermNotZero);
    }
    if f.coeffs.len() < 2 {
        return Err(OneDimError::DegreeTooSmall);
    }
    if f.coeffs[1].is_zero() {
        return Err(OneDimError::FirstCoeffZero);
    }
    let n = f.coeffs.len();
    let inv1 = Rational::one() / &f.coeffs[1];
    let mut h = PowerSeries1::zero(f.maxdeg());
    h.coeffs[1] = inv1.clone();
    for k in 2..n {
        // with h_k still zero, [z^k] f(h) is the residue the choice of h_k
        // must cancel: f_1 h_k + residue = 0
        let residue = compose(f, &h)?.coeffs[k].clone();
        h.coeffs[k] = -residue * &inv1;
    }
    debug_assert_eq!(compose(f, &h).unwrap(), PowerSeries1::z(f.maxdeg()));
    Ok(h)
}

/// The F-transform `f ↦ f⁻¹(z)/z`, a multiplicative morphism on one-variable
/// group elements; the output has invertible constant term and one degree
/// less than the input.
pub fn f_transform(f: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    comp_inverse(f)?.div_z()
}

/// The S_V-transform `m ↦ (1+z)·m⁻¹(z)/z` of a moment series with
/// invertible first moment.
pub fn s_v_transform(m: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    let base = f_transform(m)?;
    Ok(base.add(&base.mul_z().truncate(base.maxdeg())))
}

/// `LOG(f) = d/dz log(F(f))` on the unipotent subgroup (`f_1 = 1`); additive
/// across `⊠`. Output degree: input degree minus two.
pub fn log_morphism(f: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    if !f.coeffs[0].is_zero() {
        return Err(OneDimError::ConstantTermNotZero);
    }
    if f.coeffs.len() < 3 {
        return Err(OneDimError::DegreeTooSmall);
    }
    if !f.coeffs[1].is_one() {
        return Err(OneDimError::FirstCoeffNotOne);
    }
    Ok(f_transform(f)?.log()?.derivative())
}

/// `EXP = LOG⁻¹`: integrate with constant 0, exponentiate, multiply by `z`,
/// compositionally invert. Defined for any coefficient vector; gains two
/// degrees, and the result lies in the unipotent subgroup.
pub fn exp_morphism(t: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    comp_inverse(&t.integrate().exp()?.mul_z())
}

/// Voiculescu's R_V-transform on moment series: right translation by `Moeb`.
pub fn r_v(m: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    let nc = m.to_nc_series()?;
    let r = box_conv(&nc, &moeb(1, nc.maxdeg()))?;
    Ok(PowerSeries1::from_nc_series(&r))
}

/// The moment-coordinate exponential: cumulant translation, the shifted
/// coefficient identification, `EXP`, and translation back by `Zeta`.
/// Gains one degree; inverse of [`log_v`].
pub fn exp_v(m: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    let r = r_v(m)?;
    let t = r.div_z()?;
    let f = exp_morphism(&t)?;
    let nc = f.to_nc_series()?;
    let moments = box_conv(&nc, &zeta(1, nc.maxdeg()))?;
    Ok(PowerSeries1::from_nc_series(&moments))
}

/// The moment-coordinate logarithm, defined on moment series with first
/// moment 1: `z · LOG(m ⊠ Moeb)` translated back by `Zeta`. Drops one
/// degree; inverse of [`exp_v`].
pub fn log_v(m: &PowerSeries1) -> Result<PowerSeries1, OneDimError> {
    if m.coeffs.len() < 2 || !m.coeffs[1].is_one() {
        return Err(OneDimError::FirstCoeffNotOne);
    }
    let r = r_v(m)?;
    let t = log_morphism(&r)?;
    let shifted = t.mul_z();
    let nc = shifted.to_nc_series()?;
    let out = box_conv(&nc, &zeta(1, nc.maxdeg()))?;
    Ok(PowerSeries1::from_nc_series(&out))
}

/// The coefficient polynomials of the compositional inverse of the
/// universal series `z + Σ_{j>=2} X̄_j z^j`: `h_n` is the coefficient of
/// `z^{n+1}`, a polynomial in the generators `X̄_2..X̄_{n+1}` whose leading
/// coefficient is a signed Catalan number. Returned for `n = 1..maxdeg-1`.
///
/// Substituting the coefficients of a unipotent series `f` for the
/// generators evaluates `h_n` to the `z^n` coefficient of `F(f)`.
pub fn symm_coordinates(maxdeg: u32) -> Result<Vec<CoordPoly>, OneDimError> {
    if maxdeg < 2 {
        return Err(OneDimError::DegreeTooSmall);
    }
    let n = maxdeg as usize;
    let xbar = |j: usize| CoordPoly::gen(Word::new(vec![1; j]));
    // universal series u and its inverse b, coefficient vectors of polynomials
    let mut u: Vec<CoordPoly> = vec![CoordPoly::zero(); n + 1];
    u[1] = CoordPoly::one();
    for (j, slot) in u.iter_mut().enumerate().skip(2) {
        *slot = xbar(j);
    }
    let mut b: Vec<CoordPoly> = vec![CoordPoly::zero(); n + 1];
    b[1] = CoordPoly::one();
    for k in 2..=n {
        // [z^k] u(b) with b_k still zero; u_1 = 1 makes the correction -residue
        let residue = compose_coeff(&u, &b, k);
        b[k] = CoordPoly::zero().sub(&residue);
    }
    Ok(b.into_iter().skip(2).collect())
}

/// `[z^k] u(b(z))` for coefficient vectors of polynomials, `b_0 = 0`.
fn compose_coeff(u: &[CoordPoly], b: &[CoordPoly], k: usize) -> CoordPoly {
    // powers of b up to b^k, truncated at degree k
    let mut acc = CoordPoly::zero();
    let mut power: Vec<CoordPoly> = vec![CoordPoly::zero(); k + 1];
    power[0] = CoordPoly::one();
    for j in 1..=k {
        // power = power * b, truncated
        let mut next = vec![CoordPoly::zero(); k + 1];
        for (d1, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (d2, q) in b.iter().enumerate().take(k - d1 + 1) {
                if q.is_zero() {
                    continue;
                }
                next[d1 + d2] = next[d1 + d2].add(&p.mul(q));
            }
        }
        power = next;
        if j < u.len() && !u[j].is_zero() {
            acc = acc.add(&u[j].mul(&power[k]));
        }
    }
    acc
}
