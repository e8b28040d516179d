use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Result, RootIdError};

const CACHE_MAGIC: &[u8; 8] = b"RIDZERO1";

/// Ordinates of nontrivial zeros above the real axis, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source_digest: String,
}

impl ZeroTable {
    /// Table from in-memory ordinates, with the same checks as a file load.
    pub fn from_ordinates(ordinates: Vec<f64>, source_digest: String) -> Result<Self> {
        let path = PathBuf::from("<memory>");
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(format_err(&path, i + 2, format!("{} does not exceed {}", w[1], w[0])));
            }
        }
        let t = Self { ordinates, source_digest };
        t.check_first(&path)?;
        Ok(t)
    }

    fn check_first(&self, path: &Path) -> Result<()> {
        match self.ordinates.first() {
            None => Err(format_err(path, 0, "no zeros".into())),
            Some(&g) if !(g > 14.1 && g < 14.2) => Err(RootIdError::Sanity(format!(
                "{}: first ordinate {g} is not the first zero 14.1347...",
                path.display()
            ))),
            Some(_) => Ok(()),
        }
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// `gamma_n`, 1-based.
    pub fn gamma(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.ordinates.len() {
            return Err(RootIdError::Range(format!("zero #{n} requested, table holds {}", self.ordinates.len())));
        }
        Ok(self.ordinates[n - 1])
    }

    /// Number of ordinates `<= t`.
    pub fn count_up_to(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&g| g <= t)
    }

    pub fn last(&self) -> f64 {
        *self.ordinates.last().expect("tables are nonempty")
    }

    /// Hex SHA-256 of the source file.
    pub fn source_digest(&self) -> &str {
        &self.source_digest
    }

    /// First `n` ordinates, same digest.
    pub fn truncated(&self, n: usize) -> Result<ZeroTable> {
        if n == 0 || n > self.ordinates.len() {
            return Err(RootIdError::Range(format!("{n} zeros requested, table holds {}", self.ordinates.len())));
        }
        Ok(ZeroTable { ordinates: self.ordinates[..n].to_vec(), source_digest: self.source_digest.clone() })
    }
}

fn format_err(path: &Path, line: usize, message: String) -> RootIdError {
    RootIdError::Format { path: path.to_path_buf(), line, message }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn parse(path: &Path, text: &str, max_count: usize) -> Result<Vec<f64>> {
    let mut out: Vec<f64> = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        if out.len() >= max_count {
            break;
        }
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g: f64 = line
            .parse()
            .map_err(|e| format_err(path, i + 1, format!("{line:?}: {e}")))?;
        if !g.is_finite() || g <= 0.0 {
            return Err(format_err(path, i + 1, format!("ordinate {line} is not a positive number")));
        }
        if let Some(&prev) = out.last() {
            if g <= prev {
                return Err(format_err(path, i + 1, format!("{g} does not exceed previous ordinate {prev}")));
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// Loads up to `max_count` ordinates from a text file, one per line.
///
/// Blank lines and lines starting with `#` are skipped; CRLF endings are accepted.
pub fn load_zeros(path: &Path, max_count: usize) -> Result<ZeroTable> {
    let bytes = fs::read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| format_err(path, 0, format!("not UTF-8: {e}")))?;
    let ordinates = parse(path, text, max_count)?;
    let t = ZeroTable { ordinates, source_digest: digest(&bytes) };
    t.check_first(path)?;
    Ok(t)
}

/// Like [`load_zeros`], but keeps the whole parsed file in
/// `cache_dir/<digest>.zeros` and reads that on later calls.
pub fn load_zeros_cached(path: &Path, max_count: usize, cache_dir: &Path) -> Result<ZeroTable> {
    let bytes = fs::read(path)?;
    let sum = digest(&bytes);
    let cache = cache_dir.join(format!("{sum}.zeros"));
    if let Some(mut ordinates) = read_cache(&cache) {
        ordinates.truncate(max_count);
        return ZeroTable::from_ordinates(ordinates, sum);
    }
    let text = std::str::from_utf8(&bytes).map_err(|e| format_err(path, 0, format!("not UTF-8: {e}")))?;
    let mut table = ZeroTable { ordinates: parse(path, text, usize::MAX)?, source_digest: sum };
    table.check_first(path)?;
    fs::create_dir_all(cache_dir)?;
    write_cache(&cache, &table.ordinates)?;
    table.ordinates.truncate(max_count);
    Ok(table)
}

fn read_cache(path: &Path) -> Option<Vec<f64>> {
    let bytes = fs::read(path).ok()?;
    if bytes.len() < 16 || &bytes[..8] != CACHE_MAGIC {
        return None;
    }
    let n = u64::from_le_bytes(bytes[8..16].try_into().ok()?) as usize;
    let body = &bytes[16..];
    if body.len() != n * 8 {
        return None;
    }
    Some(body.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().unwrap())).collect())
}

fn write_cache(path: &Path, ordinates: &[f64]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
        f.write_all(CACHE_MAGIC)?;
        f.write_all(&(ordinates.len() as u64).to_le_bytes())?;
        for g in ordinates {
            f.write_all(&g.to_le_bytes())?;
        }
        f.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}
