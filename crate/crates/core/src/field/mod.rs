//! Exact scalars over ℚ and prime fields, and the linear algebra built on them.

mod matrix;
mod subspace;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use matrix::{row_reduce, RowReduction, SparseMatrix, SparseVec};
pub use subspace::{Quotient, Subspace};

/// Largest admissible prime modulus (exclusive). Products of two residues
/// then fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// The prime field 𝔽ₚ. Fails unless `p` is a prime below 2³¹.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    /// `+1` or `-1` depending on the parity bit.
    pub fn sign(self, negative: bool) -> Scalar {
        if negative {
            self.from_i64(-1)
        } else {
            self.one()
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::Prime(p) => Scalar(Repr::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            }),
        }
    }

    /// `num / den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::Rationals,
            Repr::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Scalar(Repr::Rational(a + b))),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                let s = (*a as u64 + *b as u64) % *p as u64;
                Ok(Scalar(Repr::Residue { value: s as u32, modulus: *p }))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Scalar(Repr::Rational(a * b))),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                let s = (*a as u64 * *b as u64) % *p as u64;
                Ok(Scalar(Repr::Residue { value: s as u32, modulus: *p }))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            }),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inv()?)
    }

    /// Negates when `negative` is set.
    pub fn signed(self, negative: bool) -> Scalar {
        if negative {
            -self
        } else {
            self
        }
    }

    /// The value as a rational number (residues map to their representative in `[0, p)`).
    pub fn to_rational(&self) -> BigRational {
        match &self.0 {
            Repr::Rational(q) => q.clone(),
            Repr::Residue { value, .. } => BigRational::from_integer(BigInt::from(*value)),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// True when the value is negative (rationals only; residues are never negative).
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_negative(),
            Repr::Residue { .. } => false,
        }
    }
}

// Operator forms panic on mixed fields; the checked methods return errors instead.

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(-q)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
