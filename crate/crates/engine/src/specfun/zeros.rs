//! Zeros of J_ν and the zero-counting function.
//!
//! No zero lies in (0, ν], and consecutive zeros of any order ν ≥ 0 are more
//! than 3 apart, so a sign scan from ν with step 3 isolates every zero.

use super::eval::triple;
use super::{check_arg, Order};
use crate::error::Result;
use std::f64::consts::PI;

const SCAN_STEP: f64 = 3.0;

/// Ascending zeros of J_ν strictly below `upper_limit`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    pub order: Order,
    pub zeros: Vec<f64>,
    pub upper_limit: f64,
}

fn scan_start(order: Order) -> f64 {
    let nu = order.value();
    if nu > 0.0 {
        nu
    } else {
        1.0
    }
}

fn sign_at(order: Order, x: f64) -> f64 {
    triple(order.twice(), x).at.signum()
}

/// Walks the scan grid over (start, upper) and reports each bracketing
/// interval `(a, b, sign(a))`; an exact zero on the grid yields `a == b`.
fn brackets(order: Order, upper: f64, mut visit: impl FnMut(f64, f64, f64)) {
    let start = scan_start(order);
    if upper <= start {
        return;
    }
    let mut a = start;
    let mut sa = sign_at(order, a);
    while a < upper {
        let b = (a + SCAN_STEP).min(upper);
        let sb = sign_at(order, b);
        if sb == 0.0 {
            if b < upper {
                visit(b, b, sa);
                a = b;
                sa = -sa;
                continue;
            }
        } else if sb != sa {
            visit(a, b, sa);
        }
        a = b;
        sa = sb;
    }
}

/// Number of zeros of J_ν in (0, upper_limit).
pub fn count_zeros(order: Order, upper_limit: f64) -> Result<usize> {
    check_arg(upper_limit)?;
    let mut n = 0;
    brackets(order, upper_limit, |_, _, _| n += 1);
    Ok(n)
}

pub fn bessel_zeros(order: Order, upper_limit: f64) -> Result<ZeroTable> {
    check_arg(upper_limit)?;
    let mut zeros = Vec::new();
    brackets(order, upper_limit, |a, b, sa| {
        let s = zeros.len() + 1;
        let z = if a == b { a } else { refine(order, a, b, sa, s) };
        zeros.push(z);
    });
    Ok(ZeroTable { order, zeros, upper_limit })
}

/// McMahon's large-zero expansion for j_{ν,s}.
fn mcmahon(nu: f64, s: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    let beta = (s as f64 + 0.5 * nu - 0.25) * PI;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

/// Safeguarded Newton inside a sign-change bracket.
fn refine(order: Order, mut lo: f64, mut hi: f64, sign_lo: f64, s: usize) -> f64 {
    let guess = mcmahon(order.value(), s);
    let mut x = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..200 {
        let t = triple(order.twice(), x);
        if t.at.is_zero() {
            return x;
        }
        if t.at.signum() == sign_lo {
            lo = x;
        } else {
            hi = x;
        }
        let step = t.at.ratio(t.derivative());
        let mut next = x - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 2.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * x {
            return next;
        }
        x = next;
    }
    x
}

/// Leading-order count (√(R²-ν²) - ν·arccos(ν/R)) / π; zero for R ≤ ν.
pub fn count_zeros_asymptotic(order: Order, upper_limit: f64) -> Result<f64> {
    check_arg(upper_limit)?;
    let nu = order.value();
    let r = upper_limit;
    if r <= nu {
        return Ok(0.0);
    }
    Ok((((r - nu) * (r + nu)).sqrt() - nu * (nu / r).acos()) / PI)
}
