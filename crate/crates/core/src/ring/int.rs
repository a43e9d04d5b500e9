//! Arbitrary-precision integer coefficients with an inline fast path.
//!
//! Almost every coefficient met in the class computations fits in an `i64`,
//! so [`Int`] keeps small values inline and only promotes to a [`BigInt`]
//! when an operation overflows. Values that fit in an `i64` are always
//! stored as [`Int::Small`], which keeps equality and hashing structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Int::Small(1) | Int::Small(-1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => match b.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
                while b != 0 {
                    let r = a % b;
                    a = b;
                    b = r;
                }
                match i64::try_from(a) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::Big(BigInt::from(a)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Quotient when `other` divides `self` exactly.
    pub fn exact_div(&self, other: &Int) -> Option<Int> {
        if other.is_zero() {
            return None;
        }
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                if *b == -1 {
                    return Some(-self);
                }
                if a % b == 0 {
                    Some(Int::Small(a / b))
                } else {
                    None
                }
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&other.to_big());
                r.is_zero().then(|| Int::from_big(q))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Residue modulo a prime below 2^63.
    pub fn rem_u64(&self, p: u64) -> u64 {
        match self {
            Int::Small(v) => v.rem_euclid(p as i64) as u64,
            Int::Big(b) => {
                let r = b.mod_floor(&BigInt::from(p));
                r.to_u64().expect("residue fits")
            }
        }
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Int::from_big(s.parse::<BigInt>()?))
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add<&Int> for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }
}

impl Sub<&Int> for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }
}

impl Mul<&Int> for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Int::from(i64::MAX);
        let b = &a + &Int::ONE;
        assert!(matches!(b, Int::Big(_)));
        let c = &b - &Int::ONE;
        assert_eq!(c, a);
        assert!(matches!(c, Int::Small(_)));
        let sq = &a * &a;
        assert_eq!(sq.exact_div(&a), Some(a.clone()));
        assert_eq!(-Int::from(i64::MIN), Int::from(BigInt::from(i64::MIN).abs()));
    }

    #[test]
    fn gcd_and_division() {
        assert_eq!(Int::from(12).gcd(&Int::from(-18)), Int::from(6));
        assert_eq!(Int::from(7).exact_div(&Int::from(2)), None);
        assert_eq!(Int::from(-8).exact_div(&Int::from(2)), Some(Int::from(-4)));
        assert_eq!(Int::from(-3).rem_u64(7), 4);
    }
}
