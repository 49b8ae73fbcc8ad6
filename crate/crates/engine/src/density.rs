//! Counting functions over a spectrum and the empirical density of
//! surface-localized eigenmodes.

use crate::bounds::{self, delta_tilde_floor, BoundInputs};
use crate::eigensolve::{Dimension, EigenRecord, Spectrum};
use crate::error::{domain, Error, Result};
use crate::localization::{energy_ratio, is_surface_localized, EnergyRatio};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Multiplicity-weighted counts of eigenvalues below `r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountSnapshot {
    pub r: f64,
    pub n_total: u64,
    pub n_localized: u64,
    pub n_unlocalized: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub r: f64,
    pub n_total: u64,
    pub n_localized: u64,
    pub n_unlocalized: u64,
    pub ratio: f64,
    pub weyl_ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub dimension: u32,
    pub n: f64,
    pub epsilon: f64,
    pub delta: f64,
    pub delta_tilde: Option<f64>,
    pub eps_tilde: Option<f64>,
    pub theory_lower: Option<f64>,
    pub theory_upper: Option<f64>,
    /// Finite-R allowance applied when comparing the final ratio to theory.
    pub slack: f64,
    pub rows: Vec<DensityRow>,
}

impl DensityReport {
    pub fn last(&self) -> Option<&DensityRow> {
        self.rows.last()
    }
}

/// Allowance used when comparing a finite-R ratio with the asymptotic bounds.
pub fn comparison_slack(dimension: Dimension) -> f64 {
    match dimension {
        Dimension::Two => 0.05,
        Dimension::Three => 0.08,
    }
}

/// Energy ratios for every record, aligned with `spectrum.records`.
pub fn energy_ratios(spectrum: &Spectrum, delta: f64) -> Result<Vec<EnergyRatio>> {
    spectrum
        .records
        .par_iter()
        .map(|r| energy_ratio(r, &spectrum.medium, delta))
        .collect()
}

pub fn count(spectrum: &Spectrum, ratios: &[EnergyRatio], epsilon: f64, r: f64) -> Result<CountSnapshot> {
    if ratios.len() != spectrum.records.len() {
        return Err(Error::Misaligned(format!(
            "{} ratios for {} records",
            ratios.len(),
            spectrum.records.len()
        )));
    }
    if r > spectrum.r_max {
        return domain(format!("count radius {r} exceeds the enumerated range {}", spectrum.r_max));
    }
    let mut snap = CountSnapshot { r, n_total: 0, n_localized: 0, n_unlocalized: 0 };
    for (rec, ratio) in spectrum.records.iter().zip(ratios) {
        if rec.k >= r {
            break;
        }
        let w = u64::from(rec.mode.multiplicity);
        snap.n_total += w;
        if is_surface_localized(ratio, epsilon) {
            snap.n_localized += w;
        } else {
            snap.n_unlocalized += w;
        }
    }
    Ok(snap)
}

impl CountSnapshot {
    pub fn ratio(&self) -> f64 {
        if self.n_total == 0 {
            0.0
        } else {
            self.n_localized as f64 / self.n_total as f64
        }
    }
}

pub fn density_sweep(
    spectrum: &Spectrum,
    r_grid: &[f64],
    epsilon: f64,
    delta: f64,
    delta_tilde: Option<f64>,
) -> Result<DensityReport> {
    let ratios = energy_ratios(spectrum, delta)?;
    density_sweep_with(spectrum, &ratios, r_grid, epsilon, delta, delta_tilde)
}

/// [`density_sweep`] with precomputed ratios.
pub fn density_sweep_with(
    spectrum: &Spectrum,
    ratios: &[EnergyRatio],
    r_grid: &[f64],
    epsilon: f64,
    delta: f64,
    delta_tilde: Option<f64>,
) -> Result<DensityReport> {
    if r_grid.windows(2).any(|w| w[0] >= w[1]) {
        return domain("radius grid must be strictly increasing");
    }
    let medium = spectrum.medium;
    let dim = medium.dimension();
    let n = medium.n();
    let coef = bounds::weyl_coefficient(dim, n);
    let d = dim.as_u32() as i32;
    let rows = r_grid
        .iter()
        .map(|&r| {
            let s = count(spectrum, ratios, epsilon, r)?;
            Ok(DensityRow {
                r,
                n_total: s.n_total,
                n_localized: s.n_localized,
                n_unlocalized: s.n_unlocalized,
                ratio: s.ratio(),
                weyl_ratio: s.n_total as f64 / (coef * r.powi(d)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let theory_lower = if n < 1.0 { Some(bounds::lower_bound(dim, n)?) } else { None };
    let (theory_upper, eps_tilde) = match delta_tilde {
        Some(dt) => {
            let inputs = BoundInputs::shell(n, delta, dt)?;
            (Some(bounds::upper_bound(dim, &inputs)?), Some(bounds::eps_tilde(&inputs)?))
        }
        None => (None, None),
    };
    Ok(DensityReport {
        dimension: dim.as_u32(),
        n,
        epsilon,
        delta,
        delta_tilde,
        eps_tilde,
        theory_lower,
        theory_upper,
        slack: comparison_slack(dim),
        rows,
    })
}

/// Whether a record lies in the band `k > (1/n + δ̃) ν` where neither field
/// can be localized at level ε̃.
pub fn in_nonlocalized_band(record: &EigenRecord, n: f64, delta_tilde: f64) -> bool {
    let nu = record.mode.order().value();
    record.k > (1.0 / n + delta_tilde) * nu
}

/// Multiplicity-weighted count of records below `r` in the non-localized band.
pub fn nonlocalized_floor(spectrum: &Spectrum, r: f64, delta: f64, delta_tilde: f64) -> Result<u64> {
    let n = spectrum.medium.n();
    if !(n < 1.0) {
        return domain(format!("the non-localized band needs n < 1, got {n}"));
    }
    let floor = delta_tilde_floor(n, delta);
    if !(delta > 0.0 && delta < 1.0 && delta_tilde > floor) {
        return domain(format!("delta_tilde must exceed {floor}, got {delta_tilde}"));
    }
    Ok(spectrum
        .records
        .iter()
        .take_while(|rec| rec.k < r)
        .filter(|rec| in_nonlocalized_band(rec, n, delta_tilde))
        .map(|rec| u64::from(rec.mode.multiplicity))
        .sum())
}
