//! Self-check suites run by `ite verify` and the acceptance tests.
//!
//! Every suite draws its samples from a seeded ChaCha stream, so a report is
//! reproducible from `(suite, seed, samples)`.

use crate::bounds::{c_threshold, delta_tilde_floor, g_aux};
use crate::eigensolve::{
    enumerate_spectrum_with, normalized_characteristic, Dimension, Medium, Mode, SolveOptions,
    Spectrum,
};
use crate::error::Result;
use crate::localization::{closed_form_f_scaled, phi_ratio};
use crate::oracle::{integrate, scan_roots, ScanGrid};
use crate::specfun::{bessel_j_scaled, bessel_zeros, Order};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::fmt;

pub const BENCHMARK_K: f64 = 101.848_526_68;
pub const BENCHMARK_N: f64 = 10.0;
pub const BENCHMARK_RMAX: f64 = 102.0;
pub const BENCHMARK_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Quadrature,
    Lemmas,
    Benchmark,
    Transform,
    Oracle,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Samples per randomized property.
    pub samples: usize,
    pub threads: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 20_240_601, samples: 500, threads: None }
    }
}

/// Result of one property: how many cases were checked and how many failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    pub detail: String,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.violations == 0
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} checked, {} violations", self.name, self.checked, self.violations)?;
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        Ok(())
    }
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_dimension(r: &mut ChaCha8Rng) -> Dimension {
    if r.gen_bool(0.5) {
        Dimension::Two
    } else {
        Dimension::Three
    }
}

/// Tracks the worst case seen so failures can be reported usefully.
struct Tally {
    checked: usize,
    violations: usize,
    worst: f64,
    worst_case: String,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, violations: 0, worst: f64::NEG_INFINITY, worst_case: String::new() }
    }

    /// `margin > 0` means the property holds.
    fn record(&mut self, margin: f64, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !(margin > 0.0) {
            self.violations += 1;
        }
        if -margin > self.worst || self.worst_case.is_empty() {
            self.worst = -margin;
            self.worst_case = case();
        }
    }

    fn finish(self, name: &'static str, what: &str) -> Outcome {
        let detail = if self.checked == 0 {
            String::new()
        } else {
            format!("tightest {what} {:.3e} at {}", -self.worst, self.worst_case)
        };
        Outcome { name, checked: self.checked, violations: self.violations, detail }
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Quadrature {
        out.push(quadrature(opts.seed, 200.max(opts.samples / 2))?);
    }
    if all || suite == Suite::Lemmas {
        out.extend(lemmas(opts.seed, opts.samples)?);
    }
    if all || suite == Suite::Benchmark {
        out.push(benchmark(opts.threads)?.outcome());
    }
    if all || suite == Suite::Transform {
        out.push(transform(opts.threads)?);
    }
    if all || suite == Suite::Oracle {
        out.push(oracle_agreement(opts.seed, opts.threads)?);
    }
    Ok(out)
}

/// Closed-form energy integral against adaptive quadrature. The integrand is
/// divided by the closed form, so the quadrature must return 1; this keeps
/// deep-underflow cases (ν ≫ κ) measurable.
pub fn quadrature(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 1);
    let mut worst = (0.0, String::new());
    let mut violations = 0;
    for _ in 0..samples {
        let order = Order::from_twice(r.gen_range(0..=200));
        let kappa = r.gen_range(1e-3..300.0);
        let f = closed_form_f_scaled(order, kappa)?;
        let q = integrate(
            |s| {
                if s <= 0.0 {
                    return 0.0;
                }
                let j = bessel_j_scaled(order, s).expect("positive argument");
                s * j.square().ratio(f)
            },
            0.0,
            kappa,
            1e-12,
        );
        let gap = (q - 1.0).abs();
        if !(gap <= 1e-9) {
            violations += 1;
        }
        if gap >= worst.0 {
            worst = (gap, format!("nu={order} kappa={kappa:.6}"));
        }
    }
    Ok(Outcome {
        name: "closed form vs quadrature",
        checked: samples,
        violations,
        detail: format!("largest relative gap {:.3e} at {}", worst.0, worst.1),
    })
}

pub fn lemmas(seed: u64, samples: usize) -> Result<Vec<Outcome>> {
    Ok(vec![
        ratio_bound(seed, samples)?,
        qi_bound(seed, samples)?,
        c_sufficiency(seed, samples)?,
        phi_monotone(seed, samples)?,
        case_one(seed, samples)?,
        g_floor(seed, samples)?,
    ])
}

/// `ν = m` in the disk and `m + 1/2` in the ball.
fn order_for(dim: Dimension, m: u32) -> Order {
    dim.order(m)
}

/// Allowance for rounding when two logarithms of nearly equal energy
/// fractions are compared.
const LN_ROUNDING: f64 = 1e-12;

/// `ln φ(κ)`, exact even where `φ` underflows.
fn ln_phi(order: Order, kappa: f64, tau: f64) -> Result<f64> {
    Ok(closed_form_f_scaled(order, kappa * tau)?.ln_abs() - closed_form_f_scaled(order, kappa)?.ln_abs())
}

fn ln_ratio(order: Order, num: f64, den: f64) -> Result<f64> {
    Ok(bessel_j_scaled(order, num)?.ln_abs() - bessel_j_scaled(order, den)?.ln_abs())
}

/// `J_ν(κτ)/J_ν(κ) ≤ τ^ν exp(ν(1-τ²)/2)` for `κ < ν`.
pub fn ratio_bound(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 2);
    let mut t = Tally::new();
    for _ in 0..samples {
        let dim = random_dimension(&mut r);
        let m = r.gen_range(1..=200u32);
        let order = order_for(dim, m);
        let nu = order.value();
        let n = r.gen_range(0.05..0.95);
        let k = r.gen_range(0.0..nu / n).max(1e-6);
        let tau = r.gen_range(0.02..0.999);
        let lhs = ln_ratio(order, k * n * tau, k * n)?;
        let rhs = nu * tau.ln() + 0.5 * nu * (1.0 - tau * tau);
        t.record(rhs - lhs, || format!("dim={} m={m} kn={:.6} tau={tau:.4}", dim.as_u32(), k * n));
    }
    Ok(t.finish("ratio bound", "log margin"))
}

/// `QI < 2(ν+1) τ^(2+2ν) exp(ν(1-τ²))` for `kn < ν`.
pub fn qi_bound(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 3);
    let mut t = Tally::new();
    for _ in 0..samples {
        let dim = random_dimension(&mut r);
        let m = r.gen_range(1..=200u32);
        let order = order_for(dim, m);
        let nu = order.value();
        let kappa = r.gen_range(0.0..nu).max(1e-6);
        let tau = r.gen_range(0.02..0.999);
        let ln_qi = ln_phi(order, kappa, tau)?;
        let ln_bound = (2.0 * (nu + 1.0)).ln() + (2.0 + 2.0 * nu) * tau.ln() + nu * (1.0 - tau * tau);
        t.record(ln_bound - ln_qi, || format!("dim={} m={m} kn={kappa:.6} tau={tau:.4}", dim.as_u32()));
    }
    Ok(t.finish("QI bound", "log margin"))
}

/// Above `C(ε,δ)`, every mode with `kn < ν` has `QI < 2ε - ε²`.
pub fn c_sufficiency(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 4);
    let mut t = Tally::new();
    for _ in 0..samples {
        let dim = random_dimension(&mut r);
        let eps = r.gen_range(0.01..0.49);
        let delta = r.gen_range(0.01..0.99);
        let c = c_threshold(eps, delta)?;
        let m = c.floor() as u32 + r.gen_range(1..=150u32);
        let order = order_for(dim, m);
        let nu = order.value();
        let kappa = r.gen_range(0.0..nu).max(1e-6);
        let tau = 1.0 - delta;
        let qi = phi_ratio(order, kappa, tau)?;
        let target = 2.0 * eps - eps * eps;
        t.record(target - qi, || {
            format!("dim={} m={m} C={c:.3} kn={kappa:.4} eps={eps:.3} delta={delta:.3}", dim.as_u32())
        });
    }
    Ok(t.finish("C(eps,delta) sufficiency", "margin"))
}

/// `φ(κ) = f(κτ)/f(κ)` increases on `(0, j_{ν,1})`.
pub fn phi_monotone(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 5);
    let mut t = Tally::new();
    for _ in 0..samples {
        let order = Order::from_twice(r.gen_range(0..=200));
        let nu = order.value();
        let first = bessel_zeros(order, 2.0 * nu + 10.0)?.zeros[0];
        let tau = r.gen_range(0.02..0.999);
        let a = r.gen_range(1e-4..first);
        let b = r.gen_range(1e-4..first);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi - lo < 1e-6 * first {
            continue;
        }
        let margin = ln_phi(order, hi, tau)? - ln_phi(order, lo, tau)? + LN_ROUNDING;
        t.record(margin, || format!("nu={order} tau={tau:.4} kappa=({lo:.6},{hi:.6})"));
    }
    Ok(t.finish("phi monotone", "log increase"))
}

/// In the disk with `n < 1` and `k < m`, `e_u ≥ e_v`, i.e. `φ(kn) ≤ φ(k)`.
pub fn case_one(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 6);
    let mut t = Tally::new();
    for _ in 0..samples {
        let m = r.gen_range(1..=200u32);
        let order = Order::integer(m);
        let n = r.gen_range(0.05..0.95);
        let k = r.gen_range(1e-3..f64::from(m));
        let tau = r.gen_range(0.02..0.999);
        let margin = ln_phi(order, k, tau)? - ln_phi(order, k * n, tau)? + LN_ROUNDING;
        t.record(margin, || format!("m={m} n={n:.4} k={k:.5} tau={tau:.4}"));
    }
    Ok(t.finish("case-1 dominance", "log margin"))
}

/// Above `(1/n + δ̃)ν`, neither field carries more than `1 - g/2` of its
/// energy in the shell: `1 - e_u² > g(τ, 1+nδ̃)/2` and
/// `1 - e_v² > g(τ, (1+nδ̃)/n)/2`.
pub fn g_floor(seed: u64, samples: usize) -> Result<Outcome> {
    let mut r = rng(seed, 7);
    let mut t = Tally::new();
    for _ in 0..samples {
        let dim = random_dimension(&mut r);
        let m = r.gen_range(1..=150u32);
        let order = order_for(dim, m);
        let nu = order.value();
        let n = r.gen_range(0.05..0.95);
        let delta = r.gen_range(0.01..0.9);
        let floor = delta_tilde_floor(n, delta);
        let delta_tilde = floor * r.gen_range(1.001..4.0);
        let k_min = (1.0 / n + delta_tilde) * nu;
        let k = k_min * r.gen_range(1.0..3.0) + r.gen_range(0.0..20.0);
        let tau = 1.0 - delta;
        let y = 1.0 + n * delta_tilde;
        let qu = phi_ratio(order, k * n, tau)?;
        let qv = phi_ratio(order, k, tau)?;
        let margin = (qu - 0.5 * g_aux(tau, y)?).min(qv - 0.5 * g_aux(tau, y / n)?);
        t.record(margin, || {
            format!("dim={} m={m} n={n:.4} delta={delta:.3} delta_tilde={delta_tilde:.4} k={k:.4}", dim.as_u32())
        });
    }
    Ok(t.finish("g-floor non-localization", "margin"))
}

/// Closest eigenvalue to the reference value for `n = 10` in the disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Benchmark {
    pub m: u32,
    pub k: f64,
    pub distance: f64,
}

impl Benchmark {
    pub fn found(&self) -> bool {
        self.distance < BENCHMARK_TOL
    }

    pub fn outcome(&self) -> Outcome {
        Outcome {
            name: "benchmark eigenvalue",
            checked: 1,
            violations: usize::from(!self.found()),
            detail: format!(
                "nearest root m={} k={:.10} is {:.3e} from {BENCHMARK_K}",
                self.m, self.k, self.distance
            ),
        }
    }
}

pub fn benchmark_search(spectrum: &Spectrum) -> Option<Benchmark> {
    spectrum
        .records
        .iter()
        .map(|r| Benchmark { m: r.mode.m, k: r.k, distance: (r.k - BENCHMARK_K).abs() })
        .min_by(|a, b| a.distance.total_cmp(&b.distance))
}

pub fn benchmark(threads: Option<usize>) -> Result<Benchmark> {
    let med = Medium::new(Dimension::Two, BENCHMARK_N)?;
    let opts = SolveOptions { tol: 1e-10, scan_step: None, threads };
    let spectrum = enumerate_spectrum_with(&med, BENCHMARK_RMAX, &opts)?;
    Ok(benchmark_search(&spectrum).expect("non-empty spectrum"))
}

/// Pairs the spectrum of `n` below `r_max` with that of `1/n` below `n r_max`
/// under `k ↦ nk`, mode by mode. Returns the number of pairs and the largest
/// mismatch, or `None` when the per-mode counts differ.
pub fn transform_gap(medium: &Medium, r_max: f64, opts: &SolveOptions) -> Result<Option<(usize, f64)>> {
    let n = medium.n();
    let a = enumerate_spectrum_with(medium, r_max, opts)?;
    let b = enumerate_spectrum_with(&medium.reciprocal(), n * r_max, opts)?;
    let top = a.max_mode().max(b.max_mode()).unwrap_or(0);
    let mut pairs = 0;
    let mut worst: f64 = 0.0;
    for m in 0..=top {
        let ka: Vec<f64> = a.mode_records(m).map(|r| r.k).collect();
        let kb: Vec<f64> = b.mode_records(m).map(|r| r.k).collect();
        if ka.len() != kb.len() {
            return Ok(None);
        }
        for (x, y) in ka.iter().zip(&kb) {
            worst = worst.max((n * x - y).abs());
            pairs += 1;
        }
    }
    Ok(Some((pairs, worst)))
}

pub fn transform(threads: Option<usize>) -> Result<Outcome> {
    let med = Medium::new(Dimension::Two, 0.5)?;
    let opts = SolveOptions { tol: 1e-12, scan_step: None, threads };
    Ok(match transform_gap(&med, 30.0, &opts)? {
        Some((pairs, gap)) => Outcome {
            name: "index transform",
            checked: pairs,
            violations: usize::from(gap > 1e-8),
            detail: format!("largest |k/2 - k'| = {gap:.3e}"),
        },
        None => Outcome {
            name: "index transform",
            checked: 1,
            violations: 1,
            detail: "per-mode root counts differ".into(),
        },
    })
}

/// Fixed-step bisection scan of randomly chosen modes against the solver.
/// The ball uses `n = 0.55`: for `n = p/q` the order-1/2 mode has triple
/// roots where the Bessel zeros of `x` and `nx` coincide, first at `qπ`,
/// and a sign scan cannot place those to better than about 1e-5.
pub fn oracle_agreement(seed: u64, threads: Option<usize>) -> Result<Outcome> {
    let mut r = rng(seed, 8);
    let mut checked = 0;
    let mut violations = 0;
    let mut worst: f64 = 0.0;
    for (dim, n, r_max) in [(Dimension::Two, 0.5, 60.0), (Dimension::Three, 0.55, 40.0), (Dimension::Two, 2.0, 30.0)] {
        let med = Medium::new(dim, n)?;
        let opts = SolveOptions { tol: 1e-12, scan_step: None, threads };
        let spectrum = enumerate_spectrum_with(&med, r_max, &opts)?;
        let top = crate::eigensolve::mode_limit(&med, r_max);
        let step = 0.05f64.min(PI / (4.0 * (1.0 + n)));
        let grid = ScanGrid::new(1e-3, r_max, step)?;
        for m in 0..=top {
            if !r.gen_bool(0.05) && m != 0 {
                continue;
            }
            let mode = Mode::new(dim, m);
            let f = |x: f64| normalized_characteristic(mode, &med, x).expect("positive argument");
            let want = scan_roots(f, &grid, 1e-13);
            let got: Vec<f64> = spectrum.mode_records(m).map(|rec| rec.k).collect();
            checked += 1;
            if want.len() != got.len() {
                violations += 1;
                continue;
            }
            let gap = want.iter().zip(&got).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            worst = worst.max(gap);
            if gap > 1e-8 {
                violations += 1;
            }
        }
    }
    Ok(Outcome {
        name: "scan oracle agreement",
        checked,
        violations,
        detail: format!("largest root gap {worst:.3e}"),
    })
}
