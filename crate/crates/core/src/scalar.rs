//! Numeric abstractions the counting and geometry kernels are generic over.
//!
//! Clique counting runs over any [`CliqueCount`] (machine integers when the
//! vertex count guarantees no overflow, [`BigUint`] otherwise). Envelope
//! geometry runs over any [`EnvelopeScalar`]: exact rationals for every
//! decision the crate makes, floats for display and cross-checks.

use std::fmt::Debug;
use std::ops::AddAssign;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// An unsigned accumulator for clique counts.
pub trait CliqueCount: Clone + Ord + Debug + Zero + One + for<'a> AddAssign<&'a Self> {
    /// Largest vertex count whose full clique count (at most `2^n`) is representable.
    const MAX_VERTICES: usize;

    fn to_biguint(&self) -> BigUint;
}

impl CliqueCount for u64 {
    const MAX_VERTICES: usize = 63;

    fn to_biguint(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl CliqueCount for u128 {
    const MAX_VERTICES: usize = 127;

    fn to_biguint(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl CliqueCount for BigUint {
    const MAX_VERTICES: usize = usize::MAX;

    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

/// Ordered field used for lower-envelope geometry.
pub trait EnvelopeScalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive
{
    /// Equality used when merging breakpoints: exact for rationals, tolerant for floats.
    fn same(&self, other: &Self) -> bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in scalar")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl EnvelopeScalar for f64 {
    fn same(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-9 * (1.0 + self.abs().max(other.abs()))
    }
}

impl EnvelopeScalar for f32 {
    fn same(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-4 * (1.0 + self.abs().max(other.abs()))
    }
}

impl EnvelopeScalar for Ratio<i64> {
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

impl EnvelopeScalar for Ratio<BigInt> {
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

/// Exact conversion of an envelope coordinate to a reduced `(numerator, denominator)` pair.
pub trait ExactRational: EnvelopeScalar {
    fn to_parts(&self) -> (BigInt, BigInt);
}

impl ExactRational for Ratio<i64> {
    fn to_parts(&self) -> (BigInt, BigInt) {
        (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl ExactRational for Ratio<BigInt> {
    fn to_parts(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}
