//! Slow, independent reference computations: brute-force sign-scan root
//! finding and adaptive Gauss-Kronrod quadrature. Production paths never call
//! these; tests and the `verify` command compare against them.

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanGrid {
    lo: f64,
    hi: f64,
    step: f64,
}

impl ScanGrid {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return domain(format!("scan grid needs lo < hi, got [{lo}, {hi}]"));
        }
        if !(step > 0.0 && step <= hi - lo) {
            return domain(format!("scan step {step} must lie in (0, {}]", hi - lo));
        }
        Ok(ScanGrid { lo, hi, step })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn halved(&self) -> Self {
        ScanGrid { step: 0.5 * self.step, ..*self }
    }

    fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let n = ((self.hi - self.lo) / self.step).ceil() as usize;
        (0..=n).map(move |i| if i == n { self.hi } else { self.lo + i as f64 * self.step })
    }
}

/// Every sign change of `f` on the grid, bisected to `tol`. Exact zeros at
/// grid points are reported as roots. Pairs of roots closer than the step
/// are invisible, which is why callers cross-check counts.
pub fn scan_roots(f: impl Fn(f64) -> f64, grid: &ScanGrid, tol: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for x in grid.points() {
        let fx = f(x);
        if fx == 0.0 {
            roots.push(x);
            prev = None;
            continue;
        }
        if let Some((a, fa)) = prev {
            if fa.signum() != fx.signum() {
                roots.push(bisect(&f, a, x, fa, tol));
            }
        }
        prev = Some((x, fx));
    }
    roots
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, fa: f64, tol: f64) -> f64 {
    let sa = fa.signum();
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// (Kronrod estimate, Gauss estimate, ∫|f| estimate) on [a, b].
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();
    for i in 0..7 {
        let dx = h * XGK[i];
        let (f1, f2) = (f(c - dx), f(c + dx));
        k += WGK[i] * (f1 + f2);
        abs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            g += WG[i / 2] * (f1 + f2);
        }
    }
    (k * h, g * h, abs * h.abs())
}

const MAX_DEPTH: u32 = 60;

fn adapt(f: &impl Fn(f64) -> f64, a: f64, b: f64, k: f64, g: f64, tol: f64, depth: u32) -> f64 {
    if (k - g).abs() <= tol || depth >= MAX_DEPTH {
        return k;
    }
    let m = 0.5 * (a + b);
    let (kl, gl, _) = gk15(f, a, m);
    let (kr, gr, _) = gk15(f, m, b);
    adapt(f, a, m, kl, gl, 0.5 * tol, depth + 1) + adapt(f, m, b, kr, gr, 0.5 * tol, depth + 1)
}

/// Adaptive 7/15-point Gauss-Kronrod quadrature. The interval is first cut
/// into unit-width panels (at least eight) so oscillations of period ~2π are
/// resolved before the error estimate is trusted.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let panels = ((b - a).abs().ceil() as usize).clamp(8, 1 << 16);
    let width = (b - a) / panels as f64;
    let first: Vec<(f64, f64, f64, f64, f64)> = (0..panels)
        .map(|i| {
            let lo = a + i as f64 * width;
            let hi = if i + 1 == panels { b } else { lo + width };
            let (k, g, abs) = gk15(&f, lo, hi);
            (lo, hi, k, g, abs)
        })
        .collect();
    let scale: f64 = first.iter().map(|p| p.4).sum();
    let tol = rel_tol * scale.max(f64::MIN_POSITIVE) / panels as f64;
    first
        .iter()
        .map(|&(lo, hi, k, g, _)| adapt(&f, lo, hi, k, g, tol, 0))
        .sum()
}
