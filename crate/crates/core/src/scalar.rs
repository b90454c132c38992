//! Exact scalar types.
//!
//! Matrices are generic over [`Scalar`], which covers the fixed-width
//! integers, arbitrary-precision integers and arbitrary-precision rationals.
//! Floating point types are deliberately absent: every quantity computed by
//! this crate is an exact rank or an exact count.
//!
//! Elimination itself runs over [`RingInt`], an integral domain with checked
//! arithmetic. `i128` is tried first and `BigInt` takes over on overflow.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// A scalar that can be stored in an exact matrix.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// The value as an exact rational.
    fn to_rational(&self) -> BigRational;

    /// An integer row proportional to `row` (same zero pattern, same span).
    fn integer_row(row: &[Self]) -> Vec<BigInt>;
}

macro_rules! impl_scalar_for_int {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn to_rational(&self) -> BigRational {
                BigRational::from_integer(BigInt::from(*self))
            }

            fn integer_row(row: &[Self]) -> Vec<BigInt> {
                row.iter().map(|&v| BigInt::from(v)).collect()
            }
        }
    )*};
}

impl_scalar_for_int!(i32, i64, i128);

impl Scalar for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn integer_row(row: &[Self]) -> Vec<BigInt> {
        row.to_vec()
    }
}

impl Scalar for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn integer_row(row: &[Self]) -> Vec<BigInt> {
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        row.iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect()
    }
}

impl Scalar for Ratio<i64> {
    fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn integer_row(row: &[Self]) -> Vec<BigInt> {
        let wide: Vec<BigRational> = row.iter().map(Scalar::to_rational).collect();
        BigRational::integer_row(&wide)
    }
}

/// Integral domain used by fraction-free elimination.
///
/// Multiplication and subtraction are checked so that a fixed-width attempt
/// can bail out and be retried with arbitrary precision.
pub trait RingInt:
    Integer + Signed + CheckedMul + CheckedSub + Clone + Debug + Send + Sync
{
    /// Narrowing conversion from an arbitrary-precision integer.
    fn from_big(v: &BigInt) -> Option<Self>;

    /// Widening conversion to an arbitrary-precision integer.
    fn to_big(&self) -> BigInt;
}

impl RingInt for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl RingInt for i64 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl RingInt for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Converts a whole integer matrix into `D`, or `None` if any entry does not fit.
pub(crate) fn narrow_rows<D: RingInt>(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<D>>> {
    rows.iter()
        .map(|row| row.iter().map(D::from_big).collect::<Option<Vec<D>>>())
        .collect()
}

/// Divides a vector by the gcd of its entries and makes the first nonzero entry positive.
pub(crate) fn normalize_content<D: RingInt>(v: &mut [D]) {
    let mut g = D::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let flip = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.div_floor(&g);
            }
        }
    }
}
