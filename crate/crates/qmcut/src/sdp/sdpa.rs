//! SDPA sparse (.dat-s) export and a matching parser.
//!
//! The file encodes the standard SDPA problem
//!     min c'x  s.t.  Σ x_i F_i − F0 ⪰ 0.
//! Our problems maximize b'x + b0 over G0 + Σ x_i G_i ⪰ 0, so exporting with
//! `maximize = true` writes c = −b, F_i = G_i, F0 = −G0; the objective
//! constant and sign convention are recorded in leading comment lines since
//! the format cannot carry them.

use crate::error::{Error, Result};
use crate::sdp::{NumericSdp, SdpProblem};

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

pub fn export_sdpa(problem: &SdpProblem, maximize: bool) -> String {
    let num = problem.to_numeric();
    let n = num.block_dim;
    let m = num.coeffs.len();
    let sense = if maximize { "maximize" } else { "minimize" };
    let mut out = String::new();
    out.push_str("* produced by qmcut\n");
    out.push_str(&format!("* sense: {sense}\n"));
    out.push_str(&format!(
        "* objective constant: {} (recover: {} external optimum, then add the constant)\n",
        fmt_f64(num.objective_constant),
        if maximize { "negate the" } else { "take the" },
    ));
    out.push_str(&format!("{m}\n1\n{n}\n"));
    let c_line: Vec<String> = num
        .objective
        .iter()
        .map(|&b| fmt_f64(if maximize { -b } else { b }))
        .collect();
    out.push_str(&c_line.join(" "));
    out.push('\n');
    // F0 = -G0
    for r in 0..n {
        for c in r..n {
            let v = -num.g0[r * n + c];
            if v != 0.0 {
                out.push_str(&format!("0 1 {} {} {}\n", r + 1, c + 1, fmt_f64(v)));
            }
        }
    }
    for (i, triplets) in num.coeffs.iter().enumerate() {
        for &(r, c, v) in triplets {
            if v != 0.0 {
                out.push_str(&format!("{} 1 {} {} {}\n", i + 1, r + 1, c + 1, fmt_f64(v)));
            }
        }
    }
    out
}

/// Parsed SDPA sparse file, mapped back to the builder's orientation
/// (G0 + Σ x_i G_i ⪰ 0 with objective coefficients for the declared sense).
#[derive(Debug, Clone)]
pub struct SdpaFile {
    pub n_vars: usize,
    pub block_dim: usize,
    pub maximize: bool,
    pub objective_constant: f64,
    /// Objective coefficients b (already de-negated for maximize files).
    pub objective: Vec<f64>,
    /// Dense row-major G0.
    pub g0: Vec<f64>,
    /// Dense row-major G_i per variable.
    pub gs: Vec<Vec<f64>>,
}

impl SdpaFile {
    pub fn to_numeric(&self) -> NumericSdp {
        let n = self.block_dim;
        let coeffs = self
            .gs
            .iter()
            .map(|g| {
                let mut t = Vec::new();
                for r in 0..n {
                    for c in r..n {
                        if g[r * n + c] != 0.0 {
                            t.push((r, c, g[r * n + c]));
                        }
                    }
                }
                t
            })
            .collect();
        NumericSdp {
            block_dim: n,
            g0: self.g0.clone(),
            coeffs,
            objective: self.objective.clone(),
            objective_constant: self.objective_constant,
        }
    }
}

pub fn parse_sdpa(text: &str) -> Result<SdpaFile> {
    let mut maximize = false;
    let mut objective_constant = 0.0;
    let mut numeric_lines = Vec::new();
    for line in text.lines() {
        let l = line.trim();
        if l.is_empty() {
            continue;
        }
        if l.starts_with('*') || l.starts_with('"') {
            if l.contains("sense: maximize") {
                maximize = true;
            }
            if let Some(rest) = l.strip_prefix("* objective constant:") {
                if let Some(first) = rest.split_whitespace().next() {
                    objective_constant = first
                        .parse()
                        .map_err(|_| Error::Parse("bad objective constant comment".into()))?;
                }
            }
            continue;
        }
        numeric_lines.push(l);
    }
    if numeric_lines.len() < 4 {
        return Err(Error::Parse("truncated SDPA file".into()));
    }
    let m: usize = numeric_lines[0]
        .split_whitespace()
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|_| Error::Parse("bad variable count".into()))?;
    let nblocks: usize = numeric_lines[1]
        .split_whitespace()
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|_| Error::Parse("bad block count".into()))?;
    if nblocks != 1 {
        return Err(Error::Parse(format!("expected 1 block, got {nblocks}")));
    }
    let n: i64 = numeric_lines[2]
        .split_whitespace()
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|_| Error::Parse("bad block size".into()))?;
    let n = n.unsigned_abs() as usize;
    let mut objective: Vec<f64> = numeric_lines[3]
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse("bad objective entry".into())))
        .collect::<Result<_>>()?;
    if objective.len() != m {
        return Err(Error::Parse(format!(
            "objective line has {} entries, expected {m}",
            objective.len()
        )));
    }
    if maximize {
        for v in &mut objective {
            *v = -*v;
        }
    }
    let mut g0 = vec![0.0; n * n];
    let mut gs = vec![vec![0.0; n * n]; m];
    for l in &numeric_lines[4..] {
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 5 {
            return Err(Error::Parse(format!("malformed entry line `{l}`")));
        }
        let matno: usize = f[0].parse().map_err(|_| Error::Parse("bad matno".into()))?;
        let r: usize = f[2].parse().map_err(|_| Error::Parse("bad row".into()))?;
        let c: usize = f[3].parse().map_err(|_| Error::Parse("bad col".into()))?;
        let v: f64 = f[4].parse().map_err(|_| Error::Parse("bad value".into()))?;
        if r < 1 || c < 1 || r > n || c > n || r > c {
            return Err(Error::Parse(format!("bad indices in `{l}`")));
        }
        let (r, c) = (r - 1, c - 1);
        if matno == 0 {
            // F0 = -G0
            g0[r * n + c] = -v;
            g0[c * n + r] = -v;
        } else if matno <= m {
            gs[matno - 1][r * n + c] = v;
            gs[matno - 1][c * n + r] = v;
        } else {
            return Err(Error::Parse(format!("matno {matno} out of range")));
        }
    }
    Ok(SdpaFile { n_vars: m, block_dim: n, maximize, objective_constant, objective, g0, gs })
}
