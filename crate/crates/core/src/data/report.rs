use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Result, RootIdError};
use crate::numerics::ComplexValue;

pub const REPORT_HEADER: &str =
    "s0,mu,d_re,d_im,r_re,r_im,rT_re,rT_im,rP_re,rP_im,rNTp_re,rNTp_im,rNTm_re,rNTm_im,trunc_bound";

/// One `(s0, mu)` line of a zeta report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRow {
    pub s0: f64,
    pub mu: f64,
    pub d: ComplexValue,
    pub r: ComplexValue,
    pub r_t: ComplexValue,
    pub r_p: ComplexValue,
    pub r_ntp: ComplexValue,
    pub r_ntm: ComplexValue,
    pub trunc_bound: f64,
}

impl ReportRow {
    fn fields(&self) -> [f64; 15] {
        [
            self.s0, self.mu, self.d.re, self.d.im, self.r.re, self.r.im, self.r_t.re, self.r_t.im,
            self.r_p.re, self.r_p.im, self.r_ntp.re, self.r_ntp.im, self.r_ntm.re, self.r_ntm.im,
            self.trunc_bound,
        ]
    }

    fn from_fields(f: &[f64; 15]) -> Self {
        let c = |i: usize| ComplexValue::new(f[i], f[i + 1]);
        ReportRow {
            s0: f[0],
            mu: f[1],
            d: c(2),
            r: c(4),
            r_t: c(6),
            r_p: c(8),
            r_ntp: c(10),
            r_ntm: c(12),
            trunc_bound: f[14],
        }
    }
}

/// Formats like C's `%.12g`.
pub fn fmt_g12(x: f64) -> String {
    fmt_g(x, 12)
}

fn fmt_g(x: f64, prec: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", prec - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= prec as i32 {
        let mant = strip_zeros(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mant}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (prec as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Sorts by `(s0, mu)` and writes the CSV.
pub fn write_report(rows: &[ReportRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(RootIdError::Config("report has no rows".into()));
    }
    fs::write(path, render_report(rows))?;
    Ok(())
}

/// The CSV text [`write_report`] writes.
pub fn render_report(rows: &[ReportRow]) -> String {
    let mut sorted = rows.to_vec();
    sorted.sort_by(|a, b| a.s0.total_cmp(&b.s0).then(a.mu.total_cmp(&b.mu)));
    let mut out = String::with_capacity(64 + 200 * rows.len());
    out.push_str(REPORT_HEADER);
    out.push('\n');
    for row in &sorted {
        let cells: Vec<String> = row.fields().iter().map(|&v| fmt_g12(v)).collect();
        writeln!(out, "{}", cells.join(",")).expect("writing to a String");
    }
    out
}

pub fn read_report(path: &Path) -> Result<Vec<ReportRow>> {
    let text = fs::read_to_string(path)?;
    let err = |line: usize, message: String| RootIdError::Format { path: path.to_path_buf(), line, message };
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == REPORT_HEADER => {}
        other => return Err(err(1, format!("unexpected header {other:?}"))),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let mut f = [0.0; 15];
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 15 {
            return Err(err(i + 2, format!("{} fields, expected 15", cells.len())));
        }
        for (slot, cell) in f.iter_mut().zip(&cells) {
            *slot = cell.parse().map_err(|e| err(i + 2, format!("{cell:?}: {e}")))?;
        }
        rows.push(ReportRow::from_fields(&f));
    }
    Ok(rows)
}
