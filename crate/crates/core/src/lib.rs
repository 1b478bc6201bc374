//! Exact combinatorial representation theory of finite unitary groups.
//!
//! The crate computes characters of symmetric and hyperoctahedral groups,
//! 2-cores and 2-quotients, generic degrees of unipotent representations of
//! `GL_n(q)` and `U_n(q)`, Harish-Chandra induction through the type-B
//! Pieri rule, and from these the cohomology of Coxeter varieties of
//! `U_{2k+1}(q)` and of closed Bruhat–Tits strata. The stratum cohomology is
//! assembled from the Ekedahl–Oort spectral sequence and checked against its
//! closed form.
//!
//! Arithmetic is exact throughout. Most routines are generic over
//! [`ExactInt`]; the aliases below fix the arbitrary-precision choice.

pub mod cohomology;
pub mod error;
pub mod harish_chandra;
pub mod partitions;
pub mod poly;
pub mod scalar;
pub mod unipotent;
pub mod weyl;

pub use error::{Error, Result};
pub use harish_chandra::{LeviShape, LeviUnipotentLabel, RepMultiset};
pub use partitions::{BetaSet, Bipartition, BorderStrip, CoreQuotient, Partition};
pub use scalar::ExactInt;
pub use unipotent::{PartitionLabel, SymbolLabel};

/// Exact character values.
pub type CharValue = num_bigint::BigInt;

/// Polynomials in `q` with arbitrary-precision integer coefficients.
pub type IntPolynomial = poly::Polynomial<num_bigint::BigInt>;

/// Character table with arbitrary-precision entries.
pub type CharTable = weyl::CharacterTable<CharValue>;
