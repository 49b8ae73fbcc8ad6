//! Evaluation regimes for J_ν with ν integer or half-integer.
//!
//! Orders are passed as `twice_nu` throughout. Three regimes cover the plane:
//! the ascending series for small arguments, Miller's backward recurrence in
//! the transition zone, and Hankel's expansion for `x >> ν²`.

use super::scaled::{frexp, Scaled};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// J_{ν-1}, J_ν and J_{ν+1} at a single argument.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triple {
    pub below: Scaled,
    pub at: Scaled,
    pub above: Scaled,
}

impl Triple {
    /// J_ν' = (J_{ν-1} - J_{ν+1}) / 2.
    pub fn derivative(&self) -> Scaled {
        self.below.sub(self.above).scale(0.5)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Regime {
    Series,
    Recurrence,
    Asymptotic,
}

pub(crate) fn regime(twice_nu: u32, x: f64) -> Regime {
    let nu = f64::from(twice_nu) / 2.0;
    if x <= 2.0 || x * x <= nu + 1.0 {
        Regime::Series
    } else if x >= 25.0 && x >= (nu + 1.0) * (nu + 1.0) {
        Regime::Asymptotic
    } else {
        Regime::Recurrence
    }
}

pub(crate) fn triple(twice_nu: u32, x: f64) -> Triple {
    triple_in(regime(twice_nu, x), twice_nu, x)
}

pub(crate) fn triple_in(regime: Regime, twice_nu: u32, x: f64) -> Triple {
    let t = twice_nu as i32;
    match regime {
        Regime::Series => {
            let at = series(t, x);
            let above = series(t + 2, x);
            let below = if t == 0 { -above } else { series(t - 2, x) };
            Triple { below, at, above }
        }
        Regime::Asymptotic => Triple {
            below: Scaled::from_f64(hankel(t - 2, x)),
            at: Scaled::from_f64(hankel(t, x)),
            above: Scaled::from_f64(hankel(t + 2, x)),
        },
        Regime::Recurrence => miller(twice_nu, x, false).0,
    }
}

/// ∫₀ˣ t J_ν(t)² dt.
///
/// For `x >= ν` the closed form ½x²J'² + ½(x²-ν²)J² has two nonnegative
/// terms. Below the turning point it cancels badly, so the positive series
/// 2 Σ_k (ν+2k+1) J_{ν+2k+1}(x)² is summed instead.
pub(crate) fn energy(twice_nu: u32, x: f64) -> Scaled {
    let nu = f64::from(twice_nu) / 2.0;
    let reg = regime(twice_nu, x);
    if x >= nu {
        let tr = triple_in(reg, twice_nu, x);
        return closed_energy(&tr, nu, x);
    }
    match reg {
        Regime::Recurrence => miller(twice_nu, x, true).1,
        _ => {
            let mut sum = Scaled::ZERO;
            let mut t = twice_nu as i32 + 2;
            loop {
                let j = series(t, x);
                let term = j.square().scale(f64::from(t) / 2.0);
                sum = sum.add(term);
                if term.is_zero() || term.ratio(sum) < 1e-18 {
                    break;
                }
                t += 4;
            }
            sum.scale(2.0)
        }
    }
}

pub(crate) fn closed_energy(tr: &Triple, nu: f64, x: f64) -> Scaled {
    let d = tr.derivative();
    let e = if tr.at.is_zero() {
        d.exponent()
    } else if d.is_zero() {
        tr.at.exponent()
    } else {
        tr.at.exponent().max(d.exponent())
    };
    let a = tr.at.mantissa_at(e);
    let b = d.mantissa_at(e);
    let v = 0.5 * x * x * b * b + 0.5 * (x - nu) * (x + nu) * a * a;
    Scaled::new(v, 2 * e)
}

/// Ascending series, valid for `twice_mu >= -1`.
pub(crate) fn series(twice_mu: i32, x: f64) -> Scaled {
    debug_assert!(twice_mu >= -1);
    let half = 0.5 * x;
    let mu = f64::from(twice_mu) / 2.0;
    // prefactor (x/2)^μ / Γ(μ+1), built by products to stay in range
    let (mut m, offset, count) = if twice_mu % 2 == 0 {
        (1.0, 0.0, twice_mu / 2)
    } else if twice_mu == -1 {
        (1.0 / (PI * half).sqrt(), 0.0, 0)
    } else {
        (2.0 * (half / PI).sqrt(), 0.5, (twice_mu - 1) / 2)
    };
    let mut e = 0i32;
    for i in 1..=count {
        m *= half / (f64::from(i) + offset);
        if !(1e-200..=1e200).contains(&m.abs()) {
            let (mm, ee) = frexp(m);
            m = mm;
            e += ee;
        }
    }
    let q = half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= -q / (k * (mu + k));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() || term == 0.0 {
            break;
        }
        k += 1.0;
    }
    Scaled::new(m * sum, e)
}

/// Hankel's large-argument expansion; `twice_mu` may be negative.
pub(crate) fn hankel(twice_mu: i32, x: f64) -> f64 {
    let four_mu2 = f64::from(twice_mu) * f64::from(twice_mu);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0f64;
    for k in 1..400 {
        let odd = f64::from(2 * k - 1);
        let next = term * (four_mu2 - odd * odd) / (8.0 * f64::from(k) * x);
        if next == 0.0 || next.abs() >= term.abs() {
            break;
        }
        term = next;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    // χ = x - (2μ+1)π/4 with the phase reduced exactly
    const R: f64 = FRAC_1_SQRT_2;
    let (cp, sp) = match (twice_mu + 1).rem_euclid(8) {
        0 => (1.0, 0.0),
        1 => (R, R),
        2 => (0.0, 1.0),
        3 => (-R, R),
        4 => (-1.0, 0.0),
        5 => (-R, -R),
        6 => (0.0, -1.0),
        _ => (R, -R),
    };
    let (sx, cx) = x.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// Miller's backward recurrence, normalized by the Neumann sum (integer
/// orders) or against the elementary J_{±1/2} (half-integer orders).
/// Optionally accumulates the energy series on the way down.
pub(crate) fn miller(twice_nu: u32, x: f64, want_energy: bool) -> (Triple, Scaled) {
    const LIMIT: f64 = 1e90;
    const SHIFT: i32 = 300;
    let down = 2f64.powi(-SHIFT);

    let half = twice_nu % 2 == 1;
    let off = if half { 0.5 } else { 0.0 };
    let top = i64::from(twice_nu / 2);
    let nu = top as f64 + off;
    let big = nu.max(x);
    let start = (big.max(nu + 1.0)).ceil() as i64 + 30 + (8.0 * big.cbrt()).ceil() as i64;
    let lowest = if half { -1 } else { 0 };

    let mut f_hi = 0.0f64;
    let mut f = 1.0f64;
    let mut frame = 0i32;
    let mut norm_sum = 0.0f64;
    let mut e_local = 0.0f64;
    let mut e_acc = Scaled::ZERO;
    let mut rec = [(0.0f64, 0i32); 3]; // below, at, above
    let mut j = start;
    loop {
        if j == top + 1 {
            rec[2] = (f, frame);
        } else if j == top {
            rec[1] = (f, frame);
        } else if j == top - 1 {
            rec[0] = (f, frame);
        }
        if want_energy && j > top && (j - top) % 2 == 1 {
            e_local += (j as f64 + off) * f * f;
        }
        if !half {
            if j == 0 {
                norm_sum += f;
            } else if j % 2 == 0 {
                norm_sum += 2.0 * f;
            }
        }
        if j == lowest {
            break;
        }
        let mu = j as f64 + off;
        let f_lo = (2.0 * mu / x) * f - f_hi;
        f_hi = f;
        f = f_lo;
        j -= 1;
        if f.abs() > LIMIT {
            f *= down;
            f_hi *= down;
            norm_sum *= down;
            if want_energy {
                e_acc = e_acc.add(Scaled::new(e_local, 2 * frame));
                e_local = 0.0;
            }
            frame += SHIFT;
        }
    }

    let c = if half {
        // f is order -1/2, f_hi is order 1/2
        let s = (2.0 / (PI * x)).sqrt();
        let (sx, cx) = x.sin_cos();
        let (a, b) = (s * sx, s * cx);
        (a * f_hi + b * f) / (f_hi * f_hi + f * f)
    } else {
        1.0 / norm_sum
    };
    let norm = Scaled::new(c, -frame);
    let at = Scaled::new(rec[1].0, rec[1].1) * norm;
    let above = Scaled::new(rec[2].0, rec[2].1) * norm;
    let below = if top == 0 && !half {
        -above
    } else {
        Scaled::new(rec[0].0, rec[0].1) * norm
    };
    let energy = if want_energy {
        let total = e_acc.add(Scaled::new(e_local, 2 * frame));
        (total * norm.square()).scale(2.0)
    } else {
        Scaled::ZERO
    };
    (Triple { below, at, above }, energy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn regimes_agree_where_they_overlap() {
        // series vs recurrence
        for &(t, x) in &[(0u32, 1.9), (1, 1.5), (10, 1.8), (40, 4.0), (201, 9.0), (5, 2.0)] {
            let s = triple_in(Regime::Series, t, x);
            let m = triple_in(Regime::Recurrence, t, x);
            assert!(rel(s.at.ratio(m.at), 1.0) < 1e-13, "t={t} x={x}");
            assert!(rel(s.above.ratio(m.above), 1.0) < 1e-13, "t={t} x={x}");
            assert!(rel(s.below.ratio(m.below), 1.0) < 1e-13, "t={t} x={x}");
        }
        // recurrence vs asymptotic
        for &(t, x) in &[(0u32, 30.0), (1, 26.3), (3, 40.0), (8, 60.5), (20, 200.0), (41, 900.0)] {
            let a = triple_in(Regime::Asymptotic, t, x);
            let m = triple_in(Regime::Recurrence, t, x);
            for (u, v) in [(a.at, m.at), (a.below, m.below), (a.above, m.above)] {
                assert!((u.to_f64() - v.to_f64()).abs() < 1e-14, "t={t} x={x}");
            }
        }
    }

    #[test]
    fn energy_paths_agree() {
        // below the turning point: series sum vs recurrence sum
        for &(t, x) in &[(20u32, 4.3), (60, 5.0), (400, 15.0)] {
            let s = {
                let mut sum = Scaled::ZERO;
                let mut tt = t as i32 + 2;
                for _ in 0..60 {
                    sum = sum.add(series(tt, x).square().scale(f64::from(tt) / 2.0));
                    tt += 4;
                }
                sum.scale(2.0)
            };
            let m = miller(t, x, true).1;
            assert!(rel(s.ratio(m), 1.0) < 1e-13, "t={t} x={x}");
        }
        // turning point: closed form vs series sum
        for &(t, x) in &[(20u32, 10.0), (41, 20.5)] {
            let closed = closed_energy(&triple(t, x), f64::from(t) / 2.0, x);
            let m = miller(t, x, true).1;
            assert!(rel(closed.ratio(m), 1.0) < 1e-12, "t={t} x={x}");
        }
    }

    #[test]
    fn half_integer_elementary_forms() {
        for &x in &[0.3, 1.0, 2.5, 7.0, 33.0, 120.0] {
            let s = (2.0 / (PI * x)).sqrt();
            let j12 = triple(1, x).at.to_f64();
            let j32 = triple(3, x).at.to_f64();
            assert!((j12 - s * x.sin()).abs() < 1e-15, "x={x}");
            assert!((j32 - s * (x.sin() / x - x.cos())).abs() < 2e-15, "x={x}");
        }
    }
}
