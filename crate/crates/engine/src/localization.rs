//! Boundary-shell energy fractions of eigenmodes.
//!
//! For a mode of order ν with wavenumber κ inside the unit disk or ball, the
//! radial energy in `r < τ` relative to the whole domain is `f(κτ)/f(κ)` with
//! `f(κ) = ∫₀^κ t J_ν(t)² dt`. The angular factors cancel.

use crate::eigensolve::{EigenRecord, Medium};
use crate::error::{domain, Result};
use crate::specfun::{bessel_energy, Order, Scaled};
use serde::{Deserialize, Serialize};

/// Fractions of the L² norm carried by the shell `1 - δ < r < 1`, for `u`
/// (wavenumber `kn`) and `v` (wavenumber `k`), as square roots of the
/// energy fractions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyRatio {
    pub e_u: f64,
    pub e_v: f64,
    pub delta: f64,
}

impl EnergyRatio {
    pub fn max(&self) -> f64 {
        self.e_u.max(self.e_v)
    }
}

pub fn closed_form_f_scaled(order: Order, kappa: f64) -> Result<Scaled> {
    bessel_energy(order, kappa)
}

/// `∫₀^κ t J_ν(t)² dt`; may underflow to zero for ν far above κ, where the
/// scaled variant stays exact.
pub fn closed_form_f(order: Order, kappa: f64) -> Result<f64> {
    Ok(bessel_energy(order, kappa)?.to_f64())
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0 && tau < 1.0) {
        return domain(format!("tau must lie in (0, 1), got {tau}"));
    }
    Ok(())
}

/// `φ(κ) = f(κτ) / f(κ)`.
pub fn phi_ratio(order: Order, kappa: f64, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    let inner = bessel_energy(order, kappa * tau)?;
    let whole = bessel_energy(order, kappa)?;
    if whole.is_zero() {
        return domain(format!("energy integral vanished at kappa = {kappa}"));
    }
    Ok(inner.ratio(whole).clamp(0.0, 1.0))
}

/// Interior fraction `f(knτ) / f(kn)` of `u`.
pub fn qi(order: Order, medium: &Medium, k: f64, tau: f64) -> Result<f64> {
    phi_ratio(order, k * medium.n(), tau)
}

pub fn energy_ratio(record: &EigenRecord, medium: &Medium, delta: f64) -> Result<EnergyRatio> {
    energy_ratio_at(record.mode.order(), medium, record.k, delta)
}

/// Energy ratio for an arbitrary wavenumber in a given mode order.
pub fn energy_ratio_at(order: Order, medium: &Medium, k: f64, delta: f64) -> Result<EnergyRatio> {
    if !(delta > 0.0 && delta <= 1.0) {
        return domain(format!("delta must lie in (0, 1], got {delta}"));
    }
    let tau = 1.0 - delta;
    if tau == 0.0 {
        return Ok(EnergyRatio { e_u: 1.0, e_v: 1.0, delta });
    }
    let qu = phi_ratio(order, k * medium.n(), tau)?;
    let qv = phi_ratio(order, k, tau)?;
    Ok(EnergyRatio { e_u: (1.0 - qu).max(0.0).sqrt(), e_v: (1.0 - qv).max(0.0).sqrt(), delta })
}

/// Strict test `max(e_u, e_v) > 1 - ε`.
pub fn is_surface_localized(ratio: &EnergyRatio, epsilon: f64) -> bool {
    ratio.e_u > 1.0 - epsilon || ratio.e_v > 1.0 - epsilon
}
