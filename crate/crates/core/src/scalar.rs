//! Numeric abstractions the kernels are generic over.
//!
//! [`Weight`] is the minimal bound for an edge weight stored in a graph.
//! [`Scalar`] adds the ring operations needed by the construction kernels;
//! it is implemented for `f32`, `f64` and exact [`BigRational`] arithmetic.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

pub trait Weight: Clone + Debug + PartialEq + Send + Sync {
    fn is_zero_weight(&self) -> bool;

    fn to_f64(&self) -> f64;

    fn is_finite_weight(&self) -> bool {
        self.to_f64().is_finite()
    }
}

pub trait Scalar: Weight + Num + std::ops::Neg<Output = Self> + 'static {
    /// True when arithmetic in this type is exact.
    const EXACT: bool;

    fn from_i64(value: i64) -> Self;

    fn from_u64(value: u64) -> Self;

    /// Converts a finite float. Exact types convert the binary value exactly.
    fn from_f64(value: f64) -> Option<Self>;
}

impl Weight for f64 {
    fn is_zero_weight(&self) -> bool {
        *self == 0.0
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Weight for f32 {
    fn is_zero_weight(&self) -> bool {
        *self == 0.0
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Weight for BigRational {
    fn is_zero_weight(&self) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_finite_weight(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn from_u64(value: u64) -> Self {
        value as f64
    }

    fn from_f64(value: f64) -> Option<Self> {
        value.is_finite().then_some(value)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        value as f32
    }

    fn from_u64(value: u64) -> Self {
        value as f32
    }

    fn from_f64(value: f64) -> Option<Self> {
        let v = value as f32;
        v.is_finite().then_some(v)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_u64(value: u64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value)
    }
}
