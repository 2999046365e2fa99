//! Command implementations for `qcoh`. Each command returns its full
//! standard-output text so it can be tested without spawning a process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex;
use qudit_coherence::channels::{rho_w, sweep, DampingFamily};
use qudit_coherence::coherence::{rec_curve, report};
use qudit_coherence::nmutp::{coherence_inversion_demo, estimate};
use qudit_coherence::{ComplexMatrix64, DensityMatrix64};
use serde::{Deserialize, Serialize};

/// Significant digits of every emitted number.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed state file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid state: {0}")]
    State(#[source] qudit_coherence::Error),
    #[error("{0}")]
    Compute(#[from] qudit_coherence::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// JSON state file: `{"dims": [..], "matrix": [[[re, im], ..], ..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text)
    }

    pub fn from_state(rho: &DensityMatrix64) -> Self {
        let m = rho.matrix();
        let matrix = (0..m.rows()).map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect()).collect();
        Self { dims: rho.dims().to_vec(), matrix }
    }

    pub fn to_state(&self) -> Result<DensityMatrix64> {
        let rows = self.matrix.iter().map(|row| row.iter().map(|&[re, im]| Complex::new(re, im)).collect()).collect();
        let mat = ComplexMatrix64::from_rows(rows).map_err(CliError::State)?;
        DensityMatrix64::new(self.dims.clone(), mat).map_err(CliError::State)
    }
}

/// `%.12g`-style formatting: shortest of fixed or exponent notation,
/// trailing zeros removed, negative zero printed as `0`.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= SIG_DIGITS as i32 {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to [`SIG_DIGITS`] so that JSON emission carries the same precision
/// as the CSV output.
pub fn round_sig(x: f64) -> f64 {
    fmt_sig(x).parse().unwrap_or(x)
}

fn csv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [f64; N]>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.iter().map(|&v| fmt_sig(v)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct CoherenceJson {
    c_hs: f64,
    c_l1: f64,
    c_re: f64,
}

pub fn cmd_coherence(path: &Path) -> Result<String> {
    let rho = StateFile::load(path)?.to_state()?;
    let r = report(&rho);
    let json = CoherenceJson { c_hs: round_sig(r.c_hs), c_l1: round_sig(r.c_l1), c_re: round_sig(r.c_re) };
    Ok(serde_json::to_string(&json)? + "\n")
}

/// CSV `a,c_re,bloch_norm`.
pub fn cmd_rec_curve(c_l1: f64, steps: usize) -> Result<String> {
    let curve = rec_curve(c_l1, steps)?;
    Ok(csv(["a", "c_re", "bloch_norm"], curve.iter().map(|p| [p.a, p.c_re, p.bloch_norm])))
}

/// CSV `p,c_hs,c_l1,c_re` for one initial state, with a leading `w` column
/// when several are requested.
pub fn cmd_dynamics(family: DampingFamily, ws: &[f64], steps: usize) -> Result<String> {
    let mut sweeps = Vec::with_capacity(ws.len());
    for &w in ws {
        sweeps.push((w, sweep(family, &rho_w(w)?, steps)?));
    }
    if let [(_, only)] = sweeps.as_slice() {
        return Ok(csv(["p", "c_hs", "c_l1", "c_re"], only.rows.iter().map(|r| [r.p, r.c_hs, r.c_l1, r.c_re])));
    }
    let rows = sweeps.iter().flat_map(|(w, s)| s.rows.iter().map(move |r| [*w, r.p, r.c_hs, r.c_l1, r.c_re]));
    Ok(csv(["w", "p", "c_hs", "c_l1", "c_re"], rows))
}

#[derive(Serialize)]
struct NmutpJson {
    dim: usize,
    samples: u64,
    hits: u64,
    percent: f64,
    seed: u64,
}

/// One JSON object per dimension.
pub fn cmd_nmutp(dims: &[usize], samples: u64, seed: u64, workers: usize) -> Result<String> {
    let mut out = String::new();
    for &d in dims {
        let e = estimate::<f64>(d, samples, seed, workers)?;
        let line =
            NmutpJson { dim: e.dim, samples: e.samples, hits: e.hits, percent: round_sig(e.percent), seed: e.seed };
        writeln!(out, "{}", serde_json::to_string(&line)?).expect("write to string");
    }
    Ok(out)
}

#[derive(Serialize)]
struct DemoJson {
    c_rho: f64,
    c_xi: f64,
    c_rhorho: f64,
    c_xixi: f64,
    d_rhorho: f64,
    d_xixi: f64,
    inverted: bool,
}

pub fn cmd_demo_inversion() -> Result<String> {
    let demo = coherence_inversion_demo::<f64>()?;
    let json = DemoJson {
        c_rho: round_sig(demo.c_rho),
        c_xi: round_sig(demo.c_xi),
        c_rhorho: round_sig(demo.c_rhorho),
        c_xixi: round_sig(demo.c_xixi),
        d_rhorho: round_sig(demo.d_rhorho),
        d_xixi: round_sig(demo.d_xixi),
        inverted: demo.inverted(),
    };
    Ok(serde_json::to_string(&json)? + "\n")
}
