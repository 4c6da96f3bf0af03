//! Coefficient types for symmetric-function expansions.
//!
//! Expansions are generic over a [`Scalar`]. The exact types ([`BigInt`] for
//! Schur multiplicities, [`BigRational`] for power-sum coordinates) are what
//! every decision in this crate uses; the floating-point impls exist for quick
//! numerical exploration and are never consulted for positivity.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// A commutative ring of coefficients that contains the integers.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync {
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

/// A [`Scalar`] in which division by a nonzero integer is exact (or, for
/// floats, as exact as the format allows).
pub trait Field: Scalar {}

impl Scalar for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}
impl Field for BigRational {}

impl Scalar for i64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_i64().expect("integer does not fit in i64")
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}
impl Field for f64 {}

impl Scalar for f32 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}
impl Field for f32 {}
