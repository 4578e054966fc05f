//! The on-disk Bernoulli number cache.
//!
//! Versioned line-oriented UTF-8 text: a magic/version line, a count line,
//! then one canonical `num/den` value per line for `B_0..B_{count-1}`.
//! Loading re-derives entries 0, 1 and one randomly chosen higher index from
//! scratch and refuses the file on any disagreement, so a corrupted or
//! hand-edited cache cannot poison a verification run.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use thiserror::Error;

use bernid::sequences::SequenceCache;
use bernid::Rat;

pub const MAGIC: &str = "bernid-bernoulli-cache v1";

#[derive(Debug, Error)]
pub enum CacheFileError {
    #[error("cannot access cache file: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a bernid cache file (bad header {0:?})")]
    BadHeader(String),
    #[error("malformed count line {0:?}")]
    BadCount(String),
    #[error("cache holds {found} entries but the header promises {expected}")]
    CountMismatch { expected: usize, found: usize },
    #[error("line {0} is not a canonical rational")]
    BadValue(usize),
    #[error("spot check failed: stored B_{0} disagrees with recomputation")]
    SpotCheckMismatch(u32),
}

pub fn save(path: &Path, values: &[Rat]) -> Result<(), CacheFileError> {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!("count {}\n", values.len()));
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    let mut file = fs::File::create(path)?;
    file.write_all(out.as_bytes())?;
    Ok(())
}

/// Loads and verifies a cache file. On success the returned values are safe
/// to install via [`SequenceCache::preload_bernoulli`].
pub fn load(path: &Path) -> Result<Vec<Rat>, CacheFileError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != MAGIC {
        return Err(CacheFileError::BadHeader(header.to_owned()));
    }
    let count_line = lines.next().unwrap_or_default();
    let expected: usize = count_line
        .strip_prefix("count ")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CacheFileError::BadCount(count_line.to_owned()))?;

    let mut values = Vec::with_capacity(expected);
    for (i, line) in lines.enumerate() {
        let value: Rat = line.parse().map_err(|_| CacheFileError::BadValue(i + 3))?;
        values.push(value);
    }
    if values.len() != expected {
        return Err(CacheFileError::CountMismatch {
            expected,
            found: values.len(),
        });
    }

    for idx in spot_check_indices(values.len()) {
        let fresh = SequenceCache::new().bernoulli_number(idx);
        if fresh != values[idx as usize] {
            return Err(CacheFileError::SpotCheckMismatch(idx));
        }
    }
    Ok(values)
}

/// Entries 0 and 1, plus one random index from the rest of the file.
fn spot_check_indices(count: usize) -> Vec<u32> {
    let mut indices: Vec<u32> = (0..count.min(2) as u32).collect();
    if count > 2 {
        let seed = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0x5eed);
        indices.push(2 + (splitmix(seed) % (count as u64 - 2)) as u32);
    }
    indices
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
