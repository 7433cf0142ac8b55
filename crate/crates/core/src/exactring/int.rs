//! Integer with an inline `i64` representation and a `BigInt` fallback.
//!
//! Invariant: a value that fits in `i64` is always `Small`, so derived
//! equality and hashing are canonical.

use std::fmt;
use std::ops::{AddAssign, Mul, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Default for Int {
    fn default() -> Self {
        Int::Small(0)
    }
}

impl Int {
    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Truncating division with remainder.
    pub fn div_rem(&self, d: &Int) -> (Int, Int) {
        if let (Int::Small(a), Int::Small(b)) = (self, d) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Int::Small(q), Int::Small(r));
            }
        }
        let (q, r) = self.to_bigint().div_rem(&d.to_bigint());
        (Int::from_big(q), Int::from_big(r))
    }

    /// Nonnegative gcd.
    pub fn gcd(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let (Some(mut a), Some(mut b)) = (a.checked_abs(), b.checked_abs()) {
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                return Int::Small(a);
            }
        }
        Int::from_big(self.to_bigint().gcd(&o.to_bigint()))
    }

    pub fn add_ref(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_add(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_bigint() + o.to_bigint())
    }

    pub fn sub_ref(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_bigint() - o.to_bigint())
    }

    pub fn mul_ref(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_bigint() * o.to_bigint())
    }

    pub fn bits(&self) -> u64 {
        match self {
            Int::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Int::Big(b) => b.bits(),
        }
    }

    /// Exact quotient; caller guarantees divisibility.
    pub fn div_exact(&self, d: &Int) -> Int {
        self.div_rem(d).0
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Int {
        Int::Small(v.into())
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl From<&BigInt> for Int {
    fn from(b: &BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b.clone())),
        }
    }
}

impl Zero for Int {
    fn zero() -> Int {
        Int::Small(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Int {
        Int::Small(1)
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, o: Int) -> Int {
        self.add_ref(&o)
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, o: Int) -> Int {
        self.mul_ref(&o)
    }
}

impl Mul<&Int> for Int {
    type Output = Int;
    fn mul(self, o: &Int) -> Int {
        self.mul_ref(o)
    }
}

impl std::ops::Add<&Int> for Int {
    type Output = Int;
    fn add(self, o: &Int) -> Int {
        self.add_ref(o)
    }
}

impl std::ops::Div<&Int> for &Int {
    type Output = Int;
    fn div(self, o: &Int) -> Int {
        self.div_rem(o).0
    }
}

impl AddAssign<Int> for Int {
    fn add_assign(&mut self, o: Int) {
        *self = self.add_ref(&o);
    }
}

impl Mul<&Int> for &Int {
    type Output = Int;
    fn mul(self, o: &Int) -> Int {
        self.mul_ref(o)
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
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
    fn add_assign(&mut self, o: &Int) {
        *self = self.add_ref(o);
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, o: &Int) {
        *self = self.sub_ref(o);
    }
}

impl SubAssign<Int> for Int {
    fn sub_assign(&mut self, o: Int) {
        *self = self.sub_ref(&o);
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, o: &Int) {
        *self = self.mul_ref(o);
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
