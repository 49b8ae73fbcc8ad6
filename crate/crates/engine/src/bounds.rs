//! Closed-form bounds on the density of surface-localized eigenmodes.

use crate::eigensolve::Dimension;
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundInputs {
    n: f64,
    delta: f64,
    delta_tilde: f64,
    epsilon: f64,
}

/// Smallest admissible shell-widening parameter `δ / (n (1 - δ))`.
pub fn delta_tilde_floor(n: f64, delta: f64) -> f64 {
    delta / (n * (1.0 - delta))
}

impl BoundInputs {
    pub fn new(n: f64, delta: f64, delta_tilde: f64, epsilon: f64) -> Result<Self> {
        if !(n > 0.0 && n < 1.0) {
            return domain(format!("bounds need 0 < n < 1, got {n}"));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return domain(format!("delta must lie in (0, 1), got {delta}"));
        }
        let floor = delta_tilde_floor(n, delta);
        if !(delta_tilde > floor && delta_tilde.is_finite()) {
            return domain(format!("delta_tilde must exceed {floor}, got {delta_tilde}"));
        }
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return domain(format!("epsilon must lie in (0, 1/2), got {epsilon}"));
        }
        Ok(BoundInputs { n, delta, delta_tilde, epsilon })
    }

    /// Inputs with `δ̃ = 2δ / (n(1-δ))`, twice the admissible floor.
    pub fn doubled_floor(n: f64, delta: f64, epsilon: f64) -> Result<Self> {
        Self::new(n, delta, 2.0 * delta_tilde_floor(n, delta), epsilon)
    }

    /// Inputs at the non-localization level, with `epsilon` set to ε̃.
    pub fn shell(n: f64, delta: f64, delta_tilde: f64) -> Result<Self> {
        let mut b = Self::new(n, delta, delta_tilde, 0.25)?;
        b.epsilon = eps_tilde(&b)?;
        Ok(b)
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn delta_tilde(&self) -> f64 {
        self.delta_tilde
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn tau(&self) -> f64 {
        1.0 - self.delta
    }

    /// The two arguments `n/(1+nδ̃)` and `1/(1+nδ̃)`.
    fn shrunk(&self) -> (f64, f64) {
        let s = 1.0 + self.n * self.delta_tilde;
        (self.n / s, 1.0 / s)
    }
}

fn check_unit(x: f64, closed_low: bool) -> Result<()> {
    let ok = if closed_low { (-1.0..=1.0).contains(&x) } else { x > 0.0 && x <= 1.0 };
    if !ok {
        return domain(format!("argument {x} outside the admissible interval"));
    }
    Ok(())
}

/// `arccos x - x√(1-x²)` (disk) or `(1-x²)^{3/2}` (ball).
pub fn p_aux(dimension: Dimension, x: f64) -> Result<f64> {
    check_unit(x, true)?;
    let s = (1.0 - x * x).sqrt();
    Ok(match dimension {
        Dimension::Two => x.acos() - x * s,
        Dimension::Three => s * s * s,
    })
}

/// `g(x, y) = √(x² - (1-x²)/(y²-1))` on `0 < x < 1, y > 1/x`.
pub fn g_aux(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) || !(y > 1.0 / x) {
        return domain(format!("g is defined for 0 < x < 1 and y > 1/x, got ({x}, {y})"));
    }
    let v = x * x - (1.0 - x * x) / (y * y - 1.0);
    Ok(v.max(0.0).sqrt())
}

fn check_index(n: f64) -> Result<()> {
    if !(n > 0.0 && n < 1.0) {
        return domain(format!("bounds need 0 < n < 1, got {n}"));
    }
    Ok(())
}

/// Lower bound on the localized fraction of the spectrum.
pub fn lower_bound(dimension: Dimension, n: f64) -> Result<f64> {
    check_index(n)?;
    let p = p_aux(dimension, n)?;
    Ok(match dimension {
        Dimension::Two => 2.0 * p / (PI * (1.0 - n * n)),
        Dimension::Three => p / (1.0 - n * n * n),
    })
}

/// Upper bound on the fraction of modes localized at level `eps_tilde`.
pub fn upper_bound(dimension: Dimension, inputs: &BoundInputs) -> Result<f64> {
    let n = inputs.n;
    let (a, b) = inputs.shrunk();
    Ok(match dimension {
        Dimension::Two => {
            let raw = p_aux(dimension, a)? - n * n * p_aux(dimension, b)?;
            2.0 * raw / (PI * (1.0 - n * n))
        }
        Dimension::Three => {
            let raw = p_aux(dimension, a)? - n * n * n * p_aux(dimension, b)?;
            raw / (1.0 - n * n * n)
        }
    })
}

/// The same upper bound assembled from the auxiliary functions `P_1`, `P_2`
/// as a fraction of the Weyl coefficient; agrees with [`upper_bound`] to
/// rounding.
pub fn upper_bound_from_aux(dimension: Dimension, inputs: &BoundInputs) -> Result<f64> {
    let n = inputs.n;
    let (a, b) = inputs.shrunk();
    let p2 = upper_aux(dimension, 2, a)? - upper_aux(dimension, 2, b)?;
    Ok(match dimension {
        Dimension::Two => {
            let p1 = upper_aux(dimension, 1, a)? - n * n * upper_aux(dimension, 1, b)?;
            let floor = 2.0 / PI * p1 - a * a / PI * p2;
            1.0 - floor / ((1.0 - n * n) / 4.0)
        }
        Dimension::Three => {
            let p1 = upper_aux(dimension, 1, a)? - n * n * n * upper_aux(dimension, 1, b)?;
            let floor = 2.0 / PI * p1 - 2.0 / (3.0 * PI) * a * a * a * p2;
            1.0 - floor / (2.0 / (9.0 * PI) * (1.0 - n * n * n))
        }
    })
}

/// `ε̃ = g(1-δ, 1+nδ̃) / 4`.
pub fn eps_tilde(inputs: &BoundInputs) -> Result<f64> {
    Ok(0.25 * g_aux(inputs.tau(), 1.0 + inputs.n * inputs.delta_tilde)?)
}

/// Mode threshold above which every eigenfunction with `k < m/n` is
/// `ε`-localized in a shell of width `δ`; independent of `n` and dimension.
pub fn c_threshold(epsilon: f64, delta: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return domain(format!("epsilon must lie in (0, 1/2), got {epsilon}"));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return domain(format!("delta must lie in (0, 1), got {delta}"));
    }
    let tau = 1.0 - delta;
    let ft = tau * tau * (1.0 - tau * tau).exp();
    let a = (1.0 + ft) / (2.0 * ft);
    let inner = (epsilon - 0.5 * epsilon * epsilon) * a.ln();
    if !(inner > 0.0) {
        return domain(format!("degenerate threshold for epsilon={epsilon}, delta={delta}"));
    }
    let c = inner.ln() / (a * ft).ln() - 1.0;
    Ok(c.max(1.0))
}

/// Building blocks of the upper bound: `which = 1` gives `P_1` (disk) or
/// its ball analogue, `which = 2` gives `P_2 = √(1-x²)/x - arccos x`.
pub fn upper_aux(dimension: Dimension, which: u8, x: f64) -> Result<f64> {
    check_unit(x, false)?;
    let s = (1.0 - x * x).sqrt();
    match (dimension, which) {
        (Dimension::Two, 1) => Ok(0.75 * x * s + 0.25 * x.asin() - 0.5 * x * x * x.acos()),
        (Dimension::Three, 1) => {
            Ok(1.0 / 9.0 + (4.0 * x * x - 1.0) / 9.0 * s - x * x * x * x.acos() / 3.0)
        }
        (_, 2) => Ok(s / x - x.acos()),
        _ => domain(format!("auxiliary index must be 1 or 2, got {which}")),
    }
}

/// Weyl coefficient: `N(R) ~ c R^d`.
pub fn weyl_coefficient(dimension: Dimension, n: f64) -> f64 {
    match dimension {
        Dimension::Two => (1.0 - n * n).abs() / 4.0,
        Dimension::Three => 2.0 / (9.0 * PI) * (1.0 - n * n * n).abs(),
    }
}
