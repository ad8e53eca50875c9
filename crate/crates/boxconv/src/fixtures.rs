//! Deterministic seeded fixtures for property suites.
//!
//! Coefficients are drawn as small rationals (numerators in `[-9, 9]`,
//! denominators in `[1, 4]`) to keep intermediate values bounded while still
//! exercising non-trivial arithmetic. The generator is a fixed splitmix64,
//! so a seed fully determines every fixture on every platform.

use alloc::vec::Vec;

use crate::rational::{rat, one, Rational};
use crate::series::{words_up_to, NcSeries, Word};

/// Splitmix64 stream; deliberately not cryptographic.
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Small rational with numerator in `[-9, 9]` and denominator in `[1, 4]`.
    pub fn small_rational(&mut self) -> Rational {
        let num = self.below(19) as i64 - 9;
        let den = self.below(4) as i64 + 1;
        rat(num, den)
    }

    /// As [`small_rational`](Self::small_rational) but never zero.
    pub fn small_nonzero_rational(&mut self) -> Rational {
        let num = self.below(18) as i64 - 9;
        let num = if num >= 0 { num + 1 } else { num };
        let den = self.below(4) as i64 + 1;
        rat(num, den)
    }
}

/// A dense random series: every coefficient a small rational.
pub fn random_series(rng: &mut Rng, s: u32, maxdeg: u32) -> NcSeries {
    let mut f = NcSeries::zero(s, maxdeg);
    for w in words_up_to(s, maxdeg) {
        f.set_coeff(w, rng.small_rational()).expect("word in range");
    }
    f
}

/// A random element of the full group: first-order coefficients nonzero.
pub fn random_group_element(rng: &mut Rng, s: u32, maxdeg: u32) -> NcSeries {
    let mut f = random_series(rng, s, maxdeg);
    for i in 1..=s {
        f.set_coeff(Word::letter(i), rng.small_nonzero_rational())
            .expect("letter in range");
    }
    f
}

/// A random element of the unipotent subgroup: first-order coefficients 1.
pub fn random_unipotent(rng: &mut Rng, s: u32, maxdeg: u32) -> NcSeries {
    let mut f = random_series(rng, s, maxdeg);
    for i in 1..=s {
        f.set_coeff(Word::letter(i), one()).expect("letter in range");
    }
    f
}

/// A random one-variable coefficient vector `a_0..a_maxdeg`.
pub fn random_coeff_vec(rng: &mut Rng, maxdeg: u32) -> Vec<Rational> {
    (0..=maxdeg).map(|_| rng.small_rational()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn deterministic_per_seed() {
        let a = random_series(&mut Rng::new(7), 2, 4);
        let b = random_series(&mut Rng::new(7), 2, 4);
        assert_eq!(a, b);
        let c = random_series(&mut Rng::new(8), 2, 4);
        assert_ne!(a, c);
    }

    #[test]
    fn nonzero_really_nonzero() {
        let mut rng = Rng::new(42);
        for _ in 0..1000 {
            assert!(!rng.small_nonzero_rational().is_zero());
        }
    }
}
