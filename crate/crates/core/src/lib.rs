//! Exact computations in the tower of affine Coxeter groups of type C̃.
//!
//! Generators of a C̃ graph of rank `m` are numbered `0 = t`, `1 … m-2 = σ_i`
//! and `m-1` for the affine end; see [`graph`] for the full table. The group
//! layer works over ℤ[√2]; the algebra layer is generic over a [`Scalar`],
//! instantiated here with arbitrary-precision rationals.

pub mod brackets;
pub mod combination;
pub mod element;
pub mod enumerate;
pub mod error;
pub mod fullcomm;
pub mod graph;
pub mod hecke;
pub mod json;
pub mod laurent;
pub mod linalg;
pub mod oracle;
pub mod quadint;
pub mod scalar;
pub mod tl;
pub mod towers;
pub mod verify;
pub mod word;

pub use brackets::{bracket_word, inverse_bracket_word};
pub use combination::{Combination, GroupAlgebraElement};
pub use element::GroupElement;
pub use enumerate::{enumerate_ball, Limits};
pub use error::{Error, Result};
pub use graph::{CoxeterGraph, Family};
pub use quadint::QuadInt;
pub use scalar::Scalar;
pub use word::Word;

pub type Rational = num_rational::BigRational;
pub type Laurent = laurent::LaurentPoly<Rational>;
pub type Hecke = hecke::HeckeElement<Rational>;
pub type Tl = tl::TlElement<Rational>;
pub type TlAlgebra = tl::TlAlgebra<Rational>;
