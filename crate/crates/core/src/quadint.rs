use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

/// An element `a + b·√2` of the ring ℤ[√2].
///
/// Entries of the reflection matrices of C̃, B and Ã live here, since twice the
/// bilinear form only takes the values `2, 0, -1, -√2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: i64,
    pub b: i64,
}

impl QuadInt {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const SQRT2: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Exact sign of `a + b√2`: `-1`, `0` or `1`.
    pub fn signum(self) -> i32 {
        let (sa, sb) = (self.a.signum(), self.b.signum());
        if sa >= 0 && sb >= 0 {
            return (sa | sb) as i32;
        }
        if sa <= 0 && sb <= 0 {
            return -1;
        }
        // Mixed signs: compare a² against 2b².
        let a2 = (self.a as i128) * (self.a as i128);
        let b2 = 2 * (self.b as i128) * (self.b as i128);
        match (sa > 0, a2.cmp(&b2)) {
            (true, std::cmp::Ordering::Greater) | (false, std::cmp::Ordering::Less) => 1,
            _ => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self.signum() < 0
    }
}

impl Add for QuadInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for QuadInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for QuadInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a * rhs.a + 2 * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl AddAssign for QuadInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for QuadInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Zero for QuadInt {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl One for QuadInt {
    fn one() -> Self {
        Self::ONE
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}√2"),
            (a, b) if b < 0 => write!(f, "{a}-{}√2", -b),
            (a, b) => write!(f, "{a}+{b}√2"),
        }
    }
}
