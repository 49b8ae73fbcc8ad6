//! Bessel functions of the first kind for integer and half-integer order.
//!
//! Values are available both as plain `f64` and as [`Scaled`] numbers whose
//! exponent range is unbounded, which the eigenvalue solver relies on for
//! orders far above the argument.

mod eval;
mod scaled;
mod zeros;

pub use eval::Triple;
pub use scaled::{common_mantissas, frexp, ldexp, Scaled};
pub use zeros::{bessel_zeros, count_zeros, count_zeros_asymptotic, ZeroTable};

use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Order ν stored as `2ν`, so integer and half-integer orders share a type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Order {
    twice_nu: u32,
}

impl Order {
    pub const fn from_twice(twice_nu: u32) -> Self {
        Order { twice_nu }
    }

    /// Order `m`.
    pub const fn integer(m: u32) -> Self {
        Order { twice_nu: 2 * m }
    }

    /// Order `m + 1/2`.
    pub const fn half_integer(m: u32) -> Self {
        Order { twice_nu: 2 * m + 1 }
    }

    pub const fn twice(self) -> u32 {
        self.twice_nu
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice_nu) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice_nu % 2 == 0
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice_nu / 2)
        } else {
            write!(f, "{}.5", self.twice_nu / 2)
        }
    }
}

fn check_arg(x: f64) -> Result<()> {
    if !(x.is_finite() && x > 0.0) {
        return domain(format!("Bessel argument must be positive and finite, got {x}"));
    }
    Ok(())
}

/// J_{ν-1}(x), J_ν(x), J_{ν+1}(x) in extended range.
pub fn bessel_triple(order: Order, x: f64) -> Result<Triple> {
    check_arg(x)?;
    Ok(eval::triple(order.twice(), x))
}

pub fn bessel_j_scaled(order: Order, x: f64) -> Result<Scaled> {
    Ok(bessel_triple(order, x)?.at)
}

pub fn bessel_j(order: Order, x: f64) -> Result<f64> {
    Ok(bessel_j_scaled(order, x)?.to_f64())
}

pub fn bessel_j_prime_scaled(order: Order, x: f64) -> Result<Scaled> {
    Ok(bessel_triple(order, x)?.derivative())
}

pub fn bessel_j_prime(order: Order, x: f64) -> Result<f64> {
    Ok(bessel_j_prime_scaled(order, x)?.to_f64())
}

/// ∫₀ˣ t J_ν(t)² dt, evaluated without quadrature.
pub fn bessel_energy(order: Order, x: f64) -> Result<Scaled> {
    check_arg(x)?;
    Ok(eval::energy(order.twice(), x))
}

/// W_ν(x) = J_ν² - J_{ν-1}J_{ν+1}, computed as 2/x² times the energy
/// integral so that no cancellation occurs below the turning point.
pub fn wronskian_w(order: Order, x: f64) -> Result<f64> {
    Ok(bessel_energy(order, x)?.scale(2.0 / (x * x)).to_f64())
}

/// Spherical Bessel j_m(x) = √(π/2x) J_{m+1/2}(x).
pub fn spherical_j(m: u32, x: f64) -> Result<f64> {
    let j = bessel_j_scaled(Order::half_integer(m), x)?;
    Ok(j.scale((PI / (2.0 * x)).sqrt()).to_f64())
}

/// d/dx j_m(x) = √(π/2x) (J'_{m+1/2}(x) - J_{m+1/2}(x)/(2x)).
pub fn spherical_j_prime(m: u32, x: f64) -> Result<f64> {
    let t = bessel_triple(Order::half_integer(m), x)?;
    let d = t.derivative().sub(t.at.scale(0.5 / x));
    Ok(d.scale((PI / (2.0 * x)).sqrt()).to_f64())
}
