use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub const DEFAULT_MATCH_TOLERANCE: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchEntry {
    pub analytic: Complex64,
    pub numeric: Option<Complex64>,
    pub distance: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    /// In the order of the analytic input.
    pub entries: Vec<MatchEntry>,
    pub tolerance: f64,
    pub matched: bool,
}

impl MatchReport {
    pub fn unmatched(&self) -> impl Iterator<Item = &MatchEntry> {
        self.entries
            .iter()
            .filter(move |e| e.distance.is_none_or(|d| d > self.tolerance))
    }

    pub fn max_distance(&self) -> Option<f64> {
        self.entries.iter().filter_map(|e| e.distance).reduce(f64::max)
    }
}

/// Greedy nearest matching: the globally closest unused (analytic, numeric)
/// pair is fixed first. Succeeds iff every analytic value has a partner
/// within `tol`.
pub fn match_spectra(analytic: &[Complex64], numeric: &[Complex64], tol: f64) -> MatchReport {
    let mut candidates: Vec<(f64, usize, usize)> = analytic
        .iter()
        .enumerate()
        .flat_map(|(i, a)| numeric.iter().enumerate().map(move |(j, b)| ((a - b).norm(), i, j)))
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut entries: Vec<MatchEntry> = analytic
        .iter()
        .map(|&a| MatchEntry {
            analytic: a,
            numeric: None,
            distance: None,
        })
        .collect();
    let mut used = vec![false; numeric.len()];
    for (d, i, j) in candidates {
        if entries[i].numeric.is_some() || used[j] {
            continue;
        }
        entries[i].numeric = Some(numeric[j]);
        entries[i].distance = Some(d);
        used[j] = true;
    }
    let matched = entries.iter().all(|e| e.distance.is_some_and(|d| d <= tol));
    MatchReport {
        entries,
        tolerance: tol,
        matched,
    }
}
