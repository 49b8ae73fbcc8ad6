//! Extended-range reals stored as `mant * 2^exp`.
//!
//! High-order Bessel values at small arguments drop far below the smallest
//! positive `f64`; carrying a separate binary exponent keeps them usable in
//! ratios and normalized products.

use std::cmp::Ordering;
use std::ops::{Mul, Neg};

/// `mant * 2^exp` with `0.5 <= |mant| < 1`, or the canonical zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    mant: f64,
    exp: i32,
}

/// `x * 2^e` without intermediate overflow or premature underflow.
pub fn ldexp(mut x: f64, mut e: i32) -> f64 {
    const STEP: i32 = 1000;
    while e > STEP {
        x *= 2f64.powi(STEP);
        e -= STEP;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -STEP {
        x *= 2f64.powi(-STEP);
        e += STEP;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(e)
}

/// Splits finite nonzero `x` into `(m, e)` with `x = m * 2^e`, `0.5 <= |m| < 1`.
pub fn frexp(x: f64) -> (f64, i32) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let bits = x.to_bits();
    let raw = ((bits >> 52) & 0x7ff) as i32;
    if raw == 0 {
        // subnormal: lift into the normal range first
        let (m, e) = frexp(x * 2f64.powi(64));
        return (m, e - 64);
    }
    let e = raw - 1022;
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
    (m, e)
}

impl Scaled {
    pub const ZERO: Scaled = Scaled { mant: 0.0, exp: 0 };

    pub fn new(mant: f64, exp: i32) -> Self {
        let (m, e) = frexp(mant);
        if m == 0.0 {
            return Self::ZERO;
        }
        Scaled { mant: m, exp: exp + e }
    }

    pub fn from_f64(x: f64) -> Self {
        Self::new(x, 0)
    }

    pub fn to_f64(self) -> f64 {
        ldexp(self.mant, self.exp)
    }

    pub fn mantissa(self) -> f64 {
        self.mant
    }

    pub fn exponent(self) -> i32 {
        self.exp
    }

    pub fn is_zero(self) -> bool {
        self.mant == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.mant.is_finite()
    }

    pub fn signum(self) -> f64 {
        if self.mant == 0.0 {
            0.0
        } else {
            self.mant.signum()
        }
    }

    pub fn abs(self) -> Self {
        Scaled { mant: self.mant.abs(), exp: self.exp }
    }

    /// Natural log of the magnitude.
    pub fn ln_abs(self) -> f64 {
        self.mant.abs().ln() + f64::from(self.exp) * std::f64::consts::LN_2
    }

    pub fn scale(self, factor: f64) -> Self {
        Self::new(self.mant * factor, self.exp)
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn sqrt(self) -> Self {
        assert!(self.mant >= 0.0, "sqrt of negative scaled value");
        if self.is_zero() {
            return self;
        }
        if self.exp % 2 == 0 {
            Self::new(self.mant.sqrt(), self.exp / 2)
        } else {
            Self::new((2.0 * self.mant).sqrt(), (self.exp - 1) / 2)
        }
    }

    /// `self / other` as a plain float (may over/underflow if the ratio does).
    pub fn ratio(self, other: Scaled) -> f64 {
        ldexp(self.mant / other.mant, self.exp - other.exp)
    }

    /// Value as a plain float after dividing by `2^exp`.
    pub fn mantissa_at(self, exp: i32) -> f64 {
        ldexp(self.mant, self.exp - exp)
    }

    pub fn add(self, other: Scaled) -> Self {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let e = self.exp.max(other.exp);
        Self::new(self.mantissa_at(e) + other.mantissa_at(e), e)
    }

    pub fn sub(self, other: Scaled) -> Self {
        self.add(-other)
    }
}

impl Mul for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled::new(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Neg for Scaled {
    type Output = Scaled;
    fn neg(self) -> Scaled {
        Scaled { mant: -self.mant, exp: self.exp }
    }
}

impl PartialOrd for Scaled {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.sub(*other).mant.partial_cmp(&0.0)
    }
}

/// Shared-exponent mantissas of a pair, largest magnitude in `[0.5, 1)`.
pub fn common_mantissas(a: Scaled, b: Scaled) -> (f64, f64) {
    let e = match (a.is_zero(), b.is_zero()) {
        (true, true) => return (0.0, 0.0),
        (true, false) => b.exp,
        (false, true) => a.exp,
        (false, false) => a.exp.max(b.exp),
    };
    (a.mantissa_at(e), b.mantissa_at(e))
}
