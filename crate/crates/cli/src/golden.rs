//! Golden-file comparison of reports.

use std::io;
use std::path::{Path, PathBuf};

use crate::report::Report;

#[derive(Debug, PartialEq, Eq)]
pub enum GoldenOutcome {
    Match,
    Mismatch {
        path: PathBuf,
        first_difference: usize,
    },
    Missing(PathBuf),
}

pub fn golden_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("{id}.json"))
}

/// Compares the report (wall time excluded) byte for byte with the stored
/// file `<dir>/<id>.json`.
pub fn compare(report: &Report, dir: &Path) -> io::Result<GoldenOutcome> {
    let path = golden_path(dir, &report.id);
    let stored = match std::fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(GoldenOutcome::Missing(path)),
        Err(e) => return Err(e),
    };
    let fresh = report.canonical_json();
    if stored == fresh {
        return Ok(GoldenOutcome::Match);
    }
    let line = stored
        .lines()
        .zip(fresh.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| stored.lines().count().min(fresh.lines().count()));
    Ok(GoldenOutcome::Mismatch {
        path,
        first_difference: line + 1,
    })
}

/// Writes the report as the new golden file.
pub fn bless(report: &Report, dir: &Path) -> io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = golden_path(dir, &report.id);
    std::fs::write(&path, report.canonical_json())?;
    Ok(path)
}
