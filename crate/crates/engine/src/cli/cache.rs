//! Line-oriented spectrum cache with a SHA-256 checksum over the body.
//!
//! ```text
//! ite-spectrum-cache 1
//! dimension 2
//! n 5.0000000000000000e-1
//! r_max 5.0000000000000000e1
//! root_tol 1.0000000000000000e-10
//! engine 0.1.0
//! created_unix 1700000000
//! records 412
//! ---
//! 0 6.7683896790803475e0 1
//! ...
//! sha256 <hex of every body line including its newline>
//! ```

use crate::eigensolve::{Dimension, EigenRecord, Medium, Mode, Spectrum};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "ite-spectrum-cache";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed cache, line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("cache checksum mismatch: stored {stored}, computed {computed}")]
    Checksum { stored: String, computed: String },
}

/// The parameters that key a cache, plus its creation time.
#[derive(Clone, Debug, PartialEq)]
pub struct CacheHeader {
    pub dimension: Dimension,
    pub n: f64,
    pub r_max: f64,
    pub root_tol: f64,
    pub engine: String,
    pub created_unix: u64,
}

impl CacheHeader {
    pub fn new(medium: &Medium, r_max: f64, root_tol: f64) -> Self {
        CacheHeader {
            dimension: medium.dimension(),
            n: medium.n(),
            r_max,
            root_tol,
            engine: ENGINE_VERSION.to_string(),
            created_unix: creation_time(),
        }
    }

    /// Same key, ignoring the timestamp.
    pub fn matches(&self, other: &CacheHeader) -> bool {
        self.dimension == other.dimension
            && self.n.to_bits() == other.n.to_bits()
            && self.r_max.to_bits() == other.r_max.to_bits()
            && self.root_tol.to_bits() == other.root_tol.to_bits()
            && self.engine == other.engine
    }
}

/// `SOURCE_DATE_EPOCH` when set, so reruns can be byte-identical.
pub fn creation_time() -> u64 {
    if let Some(t) = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.trim().parse().ok()) {
        return t;
    }
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumCache {
    pub header: CacheHeader,
    pub spectrum: Spectrum,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn body(spectrum: &Spectrum) -> String {
    let mut s = String::with_capacity(32 * spectrum.records.len());
    for r in &spectrum.records {
        let _ = writeln!(s, "{} {} {}", r.mode.m, num(r.k), r.mode.multiplicity);
    }
    s
}

fn digest(body: &str) -> String {
    Sha256::digest(body.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

impl SpectrumCache {
    pub fn new(spectrum: Spectrum, root_tol: f64) -> Self {
        let header = CacheHeader::new(&spectrum.medium, spectrum.r_max, root_tol);
        SpectrumCache { header, spectrum }
    }

    pub fn checksum(&self) -> String {
        digest(&body(&self.spectrum))
    }

    pub fn render(&self) -> String {
        let h = &self.header;
        let b = body(&self.spectrum);
        let mut s = String::new();
        let _ = writeln!(s, "{MAGIC} {FORMAT_VERSION}");
        let _ = writeln!(s, "dimension {}", h.dimension.as_u32());
        let _ = writeln!(s, "n {}", num(h.n));
        let _ = writeln!(s, "r_max {}", num(h.r_max));
        let _ = writeln!(s, "root_tol {}", num(h.root_tol));
        let _ = writeln!(s, "engine {}", h.engine);
        let _ = writeln!(s, "created_unix {}", h.created_unix);
        let _ = writeln!(s, "records {}", self.spectrum.records.len());
        s.push_str("---\n");
        s.push_str(&b);
        let _ = writeln!(s, "sha256 {}", digest(&b));
        s
    }

    pub fn parse(text: &str) -> Result<Self, CacheError> {
        let bad = |line: usize, msg: &str| CacheError::Malformed { line: line + 1, msg: msg.to_string() };
        let lines: Vec<&str> = text.split_inclusive('\n').collect();
        let field = |i: usize, key: &str| -> Result<&str, CacheError> {
            let l = lines.get(i).ok_or_else(|| bad(i, "truncated header"))?.trim_end_matches('\n');
            l.strip_prefix(key)
                .and_then(|v| v.strip_prefix(' '))
                .ok_or_else(|| bad(i, &format!("expected `{key}`")))
        };
        let float = |i: usize, key: &str| -> Result<f64, CacheError> {
            field(i, key)?.parse().map_err(|_| bad(i, &format!("bad `{key}` value")))
        };
        if field(0, MAGIC)? != FORMAT_VERSION.to_string() {
            return Err(bad(0, "unsupported format version"));
        }
        let dim: u32 = field(1, "dimension")?.parse().map_err(|_| bad(1, "bad dimension"))?;
        let dimension = Dimension::try_from(dim).map_err(|e| bad(1, &e.to_string()))?;
        let n = float(2, "n")?;
        let r_max = float(3, "r_max")?;
        let root_tol = float(4, "root_tol")?;
        let engine = field(5, "engine")?.to_string();
        let created_unix = field(6, "created_unix")?.parse().map_err(|_| bad(6, "bad timestamp"))?;
        let count: usize = field(7, "records")?.parse().map_err(|_| bad(7, "bad record count"))?;
        if lines.get(8).map(|l| l.trim_end_matches('\n')) != Some("---") {
            return Err(bad(8, "expected `---`"));
        }
        let medium = Medium::new(dimension, n).map_err(|e| bad(2, &e.to_string()))?;
        let start = 9;
        let end = start + count;
        if lines.len() != end + 1 {
            return Err(bad(lines.len().min(end), "record count does not match body"));
        }
        let body: String = lines[start..end].concat();
        let stored = field(end, "sha256")?.to_string();
        let computed = digest(&body);
        if stored != computed {
            return Err(CacheError::Checksum { stored, computed });
        }
        let mut records = Vec::with_capacity(count);
        for (i, l) in lines[start..end].iter().enumerate() {
            let line = start + i;
            let mut it = l.split_whitespace();
            let (Some(m), Some(k), Some(mult), None) = (it.next(), it.next(), it.next(), it.next()) else {
                return Err(bad(line, "expected `m k multiplicity`"));
            };
            let m: u32 = m.parse().map_err(|_| bad(line, "bad mode index"))?;
            let k: f64 = k.parse().map_err(|_| bad(line, "bad eigenvalue"))?;
            let mult: u32 = mult.parse().map_err(|_| bad(line, "bad multiplicity"))?;
            let mode = Mode::new(dimension, m);
            if mode.multiplicity != mult {
                return Err(bad(line, "multiplicity disagrees with mode"));
            }
            records.push(EigenRecord { mode, k, tol: root_tol });
        }
        let header = CacheHeader { dimension, n, r_max, root_tol, engine, created_unix };
        Ok(SpectrumCache { header, spectrum: Spectrum { medium, r_max, records } })
    }

    pub fn write(&self, path: &Path) -> Result<(), CacheError> {
        std::fs::write(path, self.render())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self, CacheError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}
