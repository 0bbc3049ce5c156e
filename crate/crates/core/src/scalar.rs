//! Coefficient fields for the algebra layer.
//!
//! Everything above the group layer (Laurent polynomials, Hecke and
//! Temperley-Lieb elements, rank computations) is generic over a [`Scalar`].
//! The crate root fixes the exact instantiation ([`crate::Rational`]); small
//! machine rationals work too as long as nothing overflows.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar type represents small integers")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}
