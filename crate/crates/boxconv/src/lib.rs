//! Exact combinatorial machinery of multivariate free probability.
//!
//! The crate is organised around the boxed convolution of truncated
//! non-commutative power series with rational coefficients:
//!
//! * [`ncpart`] — non-crossing partitions, the Kreweras complement and the
//!   lattice join,
//! * [`series`] — truncated non-commutative power series, word indexing and
//!   the block coefficient functionals,
//! * [`conv`] — the boxed convolution group: products, inverses, Zeta/Moeb,
//!   moment/cumulant transforms and the subgroup structure,
//! * [`hopf`] — the coordinate Hopf algebra: symbolic coproduct, counit,
//!   antipode, the formal group law and its Lie bracket,
//! * [`repr`] — faithful matrix representations (the generalised S-transform)
//!   with triangularity and unipotency certificates,
//! * [`onedim`] — one-variable transform calculus: compositional inversion,
//!   F/S_V-transforms and the EXP/LOG linearisation.
//!
//! All coefficients are exact rationals; every operation is pure and
//! deterministic. The crate is `no_std` (it requires `alloc`); IO and file
//! formats live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod conv;
pub mod fixtures;
pub mod hopf;
pub mod ncpart;
pub mod onedim;
pub mod rational;
pub mod repr;
pub mod series;

pub use ncpart::{enumerate_nc, NcCache, NcPartition};
pub use rational::Rational;
pub use series::{NcSeries, Word};
