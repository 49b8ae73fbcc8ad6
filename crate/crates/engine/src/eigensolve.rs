//! Real transmission eigenvalues per angular mode.
//!
//! In mode `m` the eigenvalues are the positive roots of
//! `F(x) = n J(x) J'(nx) - J(nx) J'(x)` with `J = J_m` in the disk and the
//! spherical `j_m` in the ball. Roots are located by a sign scan of a
//! normalized variant of `F` and refined by Brent's method. Completeness is
//! checked per mode against the Bessel zero-counting identity.

use crate::error::{domain, Error, Result};
use crate::specfun::{self, bessel_triple, count_zeros, Order, Scaled, Triple};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::f64::consts::PI;

/// Maximum number of scan-step halvings before a mode is declared incomplete.
pub const MAX_HALVINGS: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub enum Dimension {
    Two,
    Three,
}

impl Dimension {
    pub fn as_u32(self) -> u32 {
        match self {
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }

    /// Bessel order carried by angular mode `m`.
    pub fn order(self, m: u32) -> Order {
        match self {
            Dimension::Two => Order::integer(m),
            Dimension::Three => Order::half_integer(m),
        }
    }

    pub fn multiplicity(self, m: u32) -> u32 {
        match self {
            Dimension::Two if m == 0 => 1,
            Dimension::Two => 2,
            Dimension::Three => 2 * m + 1,
        }
    }
}

impl TryFrom<u32> for Dimension {
    type Error = Error;
    fn try_from(d: u32) -> Result<Self> {
        match d {
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            _ => domain(format!("dimension must be 2 or 3, got {d}")),
        }
    }
}

impl From<Dimension> for u32 {
    fn from(d: Dimension) -> u32 {
        d.as_u32()
    }
}

/// Unit disk or ball with constant refractive index `n != 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Medium {
    dimension: Dimension,
    n: f64,
}

impl Medium {
    pub fn new(dimension: Dimension, n: f64) -> Result<Self> {
        if !(n.is_finite() && n > 0.0) {
            return domain(format!("refractive index must be positive and finite, got {n}"));
        }
        if n == 1.0 {
            return domain("refractive index 1 makes every k an eigenvalue");
        }
        Ok(Medium { dimension, n })
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    /// Same dimension with index `1/n`; eigenvalues map as `k -> n k`.
    pub fn reciprocal(&self) -> Medium {
        Medium { dimension: self.dimension, n: 1.0 / self.n }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mode {
    pub dimension: Dimension,
    pub m: u32,
    pub multiplicity: u32,
}

impl Mode {
    pub fn new(dimension: Dimension, m: u32) -> Self {
        Mode { dimension, m, multiplicity: dimension.multiplicity(m) }
    }

    pub fn order(&self) -> Order {
        self.dimension.order(self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenRecord {
    pub mode: Mode,
    pub k: f64,
    /// Absolute tolerance: the characteristic function changes sign on
    /// `[k - tol, k + tol]`.
    pub tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub medium: Medium,
    pub r_max: f64,
    /// Sorted by `(k, m)`.
    pub records: Vec<EigenRecord>,
}

impl Spectrum {
    /// Records of mode `m` in ascending order.
    pub fn mode_records(&self, m: u32) -> impl Iterator<Item = &EigenRecord> {
        self.records.iter().filter(move |r| r.mode.m == m)
    }

    pub fn max_mode(&self) -> Option<u32> {
        self.records.iter().map(|r| r.mode.m).max()
    }
}

/// Canonical record ordering used for spectra and cache files.
pub fn record_order(a: &EigenRecord, b: &EigenRecord) -> Ordering {
    a.k.total_cmp(&b.k).then(a.mode.m.cmp(&b.mode.m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRange {
    pub low: usize,
    pub high: usize,
}

impl CountRange {
    pub fn contains(&self, count: usize) -> bool {
        (self.low..=self.high).contains(&count)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    /// Absolute root tolerance.
    pub tol: f64,
    /// Initial scan step; defaults to [`default_scan_step`].
    pub scan_step: Option<f64>,
    /// Worker threads for the mode loop; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { tol: 1e-10, scan_step: None, threads: None }
    }
}

impl SolveOptions {
    pub fn with_tol(tol: f64) -> Self {
        SolveOptions { tol, ..Default::default() }
    }
}

pub fn default_scan_step(n: f64) -> f64 {
    if n > 1.0 {
        PI / (4.0 * n)
    } else {
        PI / (2.0 * (1.0 + n))
    }
}

fn check_positive(x: f64, what: &str) -> Result<()> {
    if !(x.is_finite() && x > 0.0) {
        return domain(format!("{what} must be positive and finite, got {x}"));
    }
    Ok(())
}

/// The characteristic function itself, in the literal form. It underflows to
/// zero for modes far above `x`; root finding uses [`normalized_characteristic`].
pub fn characteristic_fn(mode: Mode, medium: &Medium, x: f64) -> Result<f64> {
    check_positive(x, "argument")?;
    let n = medium.n();
    let nx = n * x;
    match mode.dimension {
        Dimension::Two => {
            let o = mode.order();
            let a = bessel_triple(o, x)?;
            let b = bessel_triple(o, nx)?;
            let lhs = (a.at * b.derivative()).scale(n);
            let rhs = b.at * a.derivative();
            Ok(lhs.sub(rhs).to_f64())
        }
        Dimension::Three => {
            let (j1, d1) = spherical_pair(mode.m, x)?;
            let (j2, d2) = spherical_pair(mode.m, nx)?;
            Ok((j1 * d2).scale(n).sub(j2 * d1).to_f64())
        }
    }
}

fn spherical_pair(m: u32, x: f64) -> Result<(Scaled, Scaled)> {
    let t = bessel_triple(Order::half_integer(m), x)?;
    let c = (PI / (2.0 * x)).sqrt();
    let d = t.derivative().sub(t.at.scale(0.5 / x));
    Ok((t.at.scale(c), d.scale(c)))
}

/// Unit-vector mantissas of `(J, J')`.
fn direction(t: &Triple) -> (f64, f64) {
    let (a, b) = specfun::common_mantissas(t.at, t.derivative());
    let r = a.hypot(b);
    (a / r, b / r)
}

/// `F / (|(J(x), J'(x))| |(J(nx), J'(nx))|)`: same sign and roots as the
/// characteristic function, bounded by `max(1, n)`, and free of underflow.
/// For the ball this is the cylinder form at order `m + 1/2`, which differs
/// from the spherical determinant by a positive factor.
pub fn normalized_characteristic(mode: Mode, medium: &Medium, x: f64) -> Result<f64> {
    check_positive(x, "argument")?;
    Ok(normalized_raw(mode.order(), medium.n(), x))
}

fn normalized_raw(order: Order, n: f64, x: f64) -> f64 {
    let tw = order.twice();
    let (a1, b1) = direction(&bessel_triple(Order::from_twice(tw), x).expect("positive argument"));
    let (a2, b2) = direction(&bessel_triple(Order::from_twice(tw), n * x).expect("positive argument"));
    n * a1 * b2 - a2 * b1
}

/// Admissible number of roots in `(0, r_max)`: the count `N_ν(max(1,n)R) -
/// N_ν(min(1,n)R)` of Bessel zeros, less a boundary correction of 0 or 1.
pub fn count_mode(mode: Mode, medium: &Medium, r_max: f64) -> Result<CountRange> {
    check_positive(r_max, "r_max")?;
    let n = medium.n();
    let o = mode.order();
    let hi = count_zeros(o, n.max(1.0) * r_max)?;
    let lo = count_zeros(o, n.min(1.0) * r_max)?;
    let base = hi - lo;
    Ok(CountRange { low: base.saturating_sub(1), high: base })
}

/// No root lies below this point: for `n < 1` the ratio function starts
/// positive and can only cross upward before the first Bessel zero, which
/// exceeds `ν`; `n > 1` follows from the reciprocal index.
pub fn scan_floor(order: Order, n: f64) -> f64 {
    order.value().max(0.5) / n.max(1.0)
}

pub fn enumerate_mode(mode: Mode, medium: &Medium, r_max: f64, tol: f64) -> Result<Vec<EigenRecord>> {
    enumerate_mode_with(mode, medium, r_max, &SolveOptions::with_tol(tol))
}

pub fn enumerate_mode_with(
    mode: Mode,
    medium: &Medium,
    r_max: f64,
    opts: &SolveOptions,
) -> Result<Vec<EigenRecord>> {
    check_positive(r_max, "r_max")?;
    check_positive(opts.tol, "root tolerance")?;
    let range = count_mode(mode, medium, r_max)?;
    let n = medium.n();
    let order = mode.order();
    let lo = scan_floor(order, n);
    let incomplete = |found| Error::Incomplete { m: mode.m, found, low: range.low, high: range.high, r_max };
    if lo >= r_max {
        return if range.low == 0 { Ok(Vec::new()) } else { Err(incomplete(0)) };
    }
    let mut step = opts.scan_step.unwrap_or_else(|| default_scan_step(n));
    check_positive(step, "scan step")?;
    let mut found = 0;
    for _ in 0..=MAX_HALVINGS {
        let roots = scan_mode(mode, n, lo, r_max, step, opts.tol)?;
        found = roots.len();
        if found > range.high {
            return Err(incomplete(found));
        }
        if found >= range.low {
            return Ok(roots.into_iter().map(|k| EigenRecord { mode, k, tol: opts.tol }).collect());
        }
        step *= 0.5;
    }
    Err(incomplete(found))
}

fn scan_mode(mode: Mode, n: f64, lo: f64, hi: f64, step: f64, tol: f64) -> Result<Vec<f64>> {
    let order = mode.order();
    let f = |x: f64| normalized_raw(order, n, x);
    let count = ((hi - lo) / step).ceil() as usize;
    let mut roots = Vec::new();
    let mut a = lo;
    let mut fa = f(a);
    let mut pending_zero: Option<f64> = None;
    for i in 1..=count {
        let b = if i == count { hi } else { lo + i as f64 * step };
        let fb = f(b);
        if let Some(z) = pending_zero.take() {
            if fb == 0.0 || fb.signum() == fa.signum() {
                return Err(Error::Tangency { m: mode.m, k: z });
            }
            roots.push(z);
        } else if fb == 0.0 {
            if b < hi {
                pending_zero = Some(b);
                continue;
            }
        } else if fa != 0.0 && fa.signum() != fb.signum() {
            roots.push(snap_coincident(order, n, brent(&f, a, b, fa, fb, tol)));
        }
        a = b;
        fa = fb;
    }
    Ok(roots)
}

/// Where `J(x)` and `J(nx)` vanish together the characteristic function has
/// a zero of odd order three or more (for order 1/2 and `n = 1/2` it is
/// `sin³(x/2)`), too flat to locate by sign beyond about 1e-5. Such a root is
/// the common Bessel zero, which Newton on `J` finds to full precision.
fn snap_coincident(order: Order, n: f64, k: f64) -> f64 {
    let dir = |x: f64| direction(&bessel_triple(order, x).expect("positive argument"));
    if dir(k).0.abs() > 1e-4 || dir(n * k).0.abs() > 1e-4 {
        return k;
    }
    let mut x = k;
    for _ in 0..6 {
        let (a, b) = dir(x);
        x -= a / b;
    }
    if (x - k).abs() < 1e-3 && dir(n * x).0.abs() < 1e-12 {
        x
    } else {
        k
    }
}

/// Brent's method on a sign-change bracket. The returned point lies within
/// `tol` of the far end of the final bracket, so `[x - tol, x + tol]` still
/// straddles a sign change.
pub(crate) fn brent(f: &impl Fn(f64) -> f64, a: f64, b: f64, fa: f64, fb: f64, tol: f64) -> f64 {
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.25 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return b;
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    b
}

/// Largest mode index that can carry a root below `r_max`.
pub fn mode_limit(medium: &Medium, r_max: f64) -> u32 {
    let reach = medium.n().max(1.0) * r_max;
    let off = match medium.dimension() {
        Dimension::Two => 0.0,
        Dimension::Three => 0.5,
    };
    (reach - off).max(0.0).ceil() as u32
}

pub fn enumerate_spectrum(medium: &Medium, r_max: f64, tol: f64) -> Result<Spectrum> {
    enumerate_spectrum_with(medium, r_max, &SolveOptions::with_tol(tol))
}

pub fn enumerate_spectrum_with(medium: &Medium, r_max: f64, opts: &SolveOptions) -> Result<Spectrum> {
    check_positive(r_max, "r_max")?;
    let top = mode_limit(medium, r_max);
    let run = || -> Result<Vec<Vec<EigenRecord>>> {
        (0..=top)
            .into_par_iter()
            .map(|m| enumerate_mode_with(Mode::new(medium.dimension(), m), medium, r_max, opts))
            .collect()
    };
    let per_mode = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Numerical(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut records: Vec<EigenRecord> = per_mode.into_iter().flatten().collect();
    records.sort_by(record_order);
    Ok(Spectrum { medium: *medium, r_max, records })
}

/// Outcome of the crossing-slope test at a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeCheck {
    Pass,
    Fail,
    /// `J(k) J(nk)` nearly vanishes, so the ratio function is undefined.
    Skipped,
}

/// Slope at `k` of `P(x) = n J'(nx)/J(nx) - J'(x)/J(x)`, which has the
/// same roots as the characteristic function away from Bessel zeros.
pub fn ratio_slope(mode: Mode, medium: &Medium, k: f64) -> Result<Option<f64>> {
    check_positive(k, "k")?;
    let n = medium.n();
    let o = mode.order();
    for x in [k, n * k] {
        let t = bessel_triple(o, x)?;
        let (a, b) = direction(&t);
        if a.abs() < 1e-6 * a.hypot(b) {
            return Ok(None);
        }
    }
    let p = |x: f64| -> Result<f64> {
        let t1 = bessel_triple(o, x)?;
        let t2 = bessel_triple(o, n * x)?;
        Ok(n * t2.derivative().ratio(t2.at) - t1.derivative().ratio(t1.at))
    };
    let h = 1e-6 * k.max(1.0);
    Ok(Some((p(k + h)? - p(k - h)?) / (2.0 * h)))
}

/// At every root the ratio function crosses with slope exactly `1 - n²`;
/// passes when the measured slope has that sign and lies within 20% of it.
pub fn crossing_slope_check(record: &EigenRecord, medium: &Medium) -> Result<SlopeCheck> {
    let expected = 1.0 - medium.n() * medium.n();
    Ok(match ratio_slope(record.mode, medium, record.k)? {
        None => SlopeCheck::Skipped,
        Some(s) if (s - expected).abs() <= 0.2 * expected.abs() => SlopeCheck::Pass,
        Some(_) => SlopeCheck::Fail,
    })
}
