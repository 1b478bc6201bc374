//! Exact scalar types.
//!
//! Every computation in this crate is exact. Character values, class sizes
//! and polynomial coefficients are generic over [`ExactInt`], which is
//! implemented for the machine integers and for [`num_bigint::BigInt`].
//! Machine integers are convenient for small ranks; `BigInt` is used by the
//! crate-level aliases and never overflows.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// A signed integer type with exact Euclidean division.
pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("integer does not fit the scalar type")
    }

    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("integer does not fit the scalar type")
    }
}

impl ExactInt for i32 {}
impl ExactInt for i64 {}
impl ExactInt for i128 {}
impl ExactInt for BigInt {}

/// `n!` in the scalar type.
pub fn factorial<T: ExactInt>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * T::from_usize_exact(i))
}

/// `base^exp` by repeated squaring.
pub fn pow<T: ExactInt>(base: &T, exp: usize) -> T {
    let mut result = T::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b.clone();
        }
        b = b.clone() * b;
        e >>= 1;
    }
    result
}

/// `(-1)^e`.
pub fn sign<T: ExactInt>(e: usize) -> T {
    if e % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_and_pow() {
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i64>(5), 120);
        assert_eq!(
            factorial::<BigInt>(25).to_string(),
            "15511210043330985984000000"
        );
        assert_eq!(pow(&3i64, 4), 81);
        assert_eq!(pow(&-2i64, 3), -8);
        assert_eq!(pow(&7i128, 0), 1);
        assert_eq!(sign::<i32>(3), -1);
    }
}
