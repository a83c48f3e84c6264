//! Exact Walsh-spectral tools for combinatorial `t`-designs.
//!
//! An incidence structure with `k`-subsets of `[1..n]` as blocks is treated
//! as a Boolean function on `GF(2)^n`; design properties are read off its
//! Walsh spectrum and algebraic normal form. All arithmetic is exact.

pub mod admissibility;
pub mod boolfn;
pub mod codes;
pub mod delsarte;
pub mod design;
pub mod error;
pub mod exactmath;
pub mod fixtures;
pub mod format;
pub mod pointset;
pub mod spectral;

pub use boolfn::{
    anf, inverse_walsh, walsh_at, walsh_by_weight, walsh_full, AlgebraicNormalForm, BooleanFunction,
    SpectrumByWeight, WalshSpectrum,
};
pub use design::{verify_bruteforce, DesignParameters, IncidenceStructure};
pub use error::{Error, Result};
pub use exactmath::{krawtchouk, ExactInt, ExactRational};
pub use pointset::PointSet;
pub use spectral::{verify_spectral, SpectralVerdict};
