//! Exact decomposition of the conjugation action of the symmetric group on
//! each of its conjugacy classes, and detection of *global* classes (those
//! whose permutation module contains every irreducible).
//!
//! Symmetric functions are held as sparse expansions generic over a
//! coefficient [`Scalar`]; the exact instantiations [`PowerSum`] (rational
//! power-sum coordinates) and [`Schur`] (integer multiplicities) are the ones
//! every verdict is computed with.
//!
//! ```
//! use symconj::{conjrep, globalcheck, part, schur};
//!
//! let f5 = conjrep::f_n_schur(5).unwrap();
//! let missing = schur::missing_irreducibles(&f5).unwrap();
//! assert_eq!(missing.into_iter().collect::<Vec<_>>(), vec![part![4, 1], part![2, 1, 1, 1]]);
//!
//! assert!(globalcheck::is_global(&part![5, 3, 1], false).unwrap().is_global);
//! ```

pub mod charcalc;
pub mod conjrep;
pub mod error;
pub mod expansion;
pub mod globalcheck;
pub mod json;
pub mod oracle;
pub mod partition;
pub mod profile;
pub mod psum;
pub mod scalar;
pub mod schur;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use expansion::{Basis, Expansion, PowerSumBasis, SchurBasis};
pub use partition::{partitions_of, Partition, SkewShape};
pub use psum::PowerSumExpansion;
pub use scalar::{Field, Scalar};
pub use schur::SchurExpansion;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Power-sum expansion with exact rational coordinates.
pub type PowerSum = PowerSumExpansion<Rational>;
/// Schur expansion with exact integer coordinates.
pub type Schur = SchurExpansion<Integer>;

/// Floating-point variants, for exploration only.
pub type PowerSumF64 = PowerSumExpansion<f64>;
pub type SchurF64 = SchurExpansion<f64>;
