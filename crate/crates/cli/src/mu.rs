//! `--mu` values: comma-separated numbers and `start:stop:step` ranges.

use rootid::data::fmt_g12;

/// Upper limit on points in one range.
const MAX_POINTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuPoint {
    pub mu: f64,
    /// Written out by the user rather than generated by a range. Guarded
    /// explicit points are errors; guarded range points are skipped.
    pub explicit: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MuList(pub Vec<MuPoint>);

/// A float that survives printing at 12 significant digits unchanged.
pub fn g12_float(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    if !x.is_finite() {
        return Err(format!("{s:?} is not finite"));
    }
    if snap(x) != x {
        return Err(format!("{s:?} has more than 12 significant digits"));
    }
    Ok(x)
}

fn snap(x: f64) -> f64 {
    fmt_g12(x).parse().expect("g12 output parses")
}

pub fn parse_mu(s: &str) -> Result<MuList, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(format!("empty item in {s:?}"));
        }
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [one] => out.push(MuPoint { mu: g12_float(one)?, explicit: true }),
            [a, b, h] => {
                let (a, b, h) = (g12_float(a)?, g12_float(b)?, g12_float(h)?);
                if !(h > 0.0) || b < a {
                    return Err(format!("range {item:?} needs start <= stop and step > 0"));
                }
                let n = ((b - a) / h + 1e-9).floor() as usize + 1;
                if n > MAX_POINTS {
                    return Err(format!("range {item:?} has {n} points, limit {MAX_POINTS}"));
                }
                // snapped so that every grid value prints and parses back exactly
                out.extend((0..n).map(|i| MuPoint { mu: snap(a + i as f64 * h), explicit: false }));
            }
            _ => return Err(format!("{item:?} is neither a number nor start:stop:step")),
        }
    }
    Ok(MuList(out))
}
