//! Predicted versus actual solution counts for square tables.
//!
//! The prediction is `N = (p - 2)(p - 1) + 1` with `p` the number of divisors
//! of the side length. A row whose actual count differs from the prediction
//! is a finding and only gets flagged; engines that disagree with each other
//! abort the whole report.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::divisors;
use crate::error::{Error, Result};
use crate::geometry;
use crate::oracle::{self, SearchLimits, DEFAULT_BRUTEFORCE_CAP};
use crate::splitter;
use crate::splitting::Splitting;

pub fn predict(n: usize) -> usize {
    let p = divisors(n).len();
    (p.saturating_sub(2)) * (p - 1) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictionRow {
    pub n: usize,
    pub divisors: Vec<usize>,
    pub p: usize,
    pub predicted: usize,
    pub cyclotomic: Option<usize>,
    pub geometry_flat: Option<usize>,
    pub geometry_full: Option<usize>,
    pub oracle: Option<usize>,
    /// Set when the engines' common count differs from `predicted`.
    pub prediction_mismatch: bool,
}

impl PredictionRow {
    /// The count all present engines agreed on.
    pub fn actual(&self) -> Option<usize> {
        self.cyclotomic.or(self.geometry_full).or(self.oracle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportOptions {
    /// Side lengths above this skip the brute-force oracle.
    pub skip_oracle_above: Option<usize>,
    /// Time budget for each row's oracle search; a row that runs out reports
    /// no oracle count.
    pub oracle_budget: Option<Duration>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            skip_oracle_above: None,
            oracle_budget: Some(Duration::from_secs(60)),
        }
    }
}

fn skippable<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::CellCapExceeded { .. })
        | Err(Error::BipartitionLimitExceeded { .. })
        | Err(Error::TimeBudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn compare(n: usize, engines: &[(&str, &Option<Vec<Splitting>>)]) -> Result<()> {
    let present: Vec<_> = engines
        .iter()
        .filter_map(|(name, sols)| sols.as_ref().map(|s| (*name, s)))
        .collect();
    for pair in present.windows(2) {
        let ((n1, s1), (n2, s2)) = (pair[0], pair[1]);
        if s1 != s2 {
            let only1: Vec<String> = s1.iter().filter(|s| !s2.contains(s)).map(|s| s.to_string()).collect();
            let only2: Vec<String> = s2.iter().filter(|s| !s1.contains(s)).map(|s| s.to_string()).collect();
            return Err(Error::EngineDisagreement {
                rows: n,
                cols: n,
                detail: format!(
                    "{n1} found {} and {n2} found {}; only {n1}: [{}]; only {n2}: [{}]",
                    s1.len(),
                    s2.len(),
                    only1.join("; "),
                    only2.join("; ")
                ),
            });
        }
    }
    Ok(())
}

pub fn build_row(n: usize, options: &ReportOptions) -> Result<PredictionRow> {
    if n < 2 {
        return Err(Error::InvalidArgument("side length must be at least 2".into()));
    }
    let cyclotomic = skippable(splitter::enumerate_cyclotomic(n, n))?;
    let full = skippable(geometry::enumerate_schemes(n, n))?;
    let flat = skippable(geometry::flat_patterns(n))?;
    let run_oracle = options.skip_oracle_above.map_or(true, |max| n <= max);
    let brute = if run_oracle {
        let limits = SearchLimits {
            cell_cap: DEFAULT_BRUTEFORCE_CAP,
            max_time: options.oracle_budget,
        };
        skippable(oracle::enumerate_bruteforce_with(n, n, &limits))?
    } else {
        None
    };
    compare(
        n,
        &[
            ("cyclotomic", &cyclotomic),
            ("geometry", &full),
            ("oracle", &brute),
        ],
    )?;
    let divs = divisors(n);
    let predicted = predict(n);
    let mut row = PredictionRow {
        n,
        p: divs.len(),
        divisors: divs,
        predicted,
        cyclotomic: cyclotomic.map(|s| s.len()),
        geometry_flat: flat.map(|s| s.len()),
        geometry_full: full.map(|s| s.len()),
        oracle: brute.map(|s| s.len()),
        prediction_mismatch: false,
    };
    row.prediction_mismatch = row.actual().is_some_and(|a| a != predicted);
    Ok(row)
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub rows: Vec<PredictionRow>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn flagged(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.prediction_mismatch)
            .map(|r| r.n)
            .collect()
    }

    /// Aligned text table in the layout of a divisor/solution-count table,
    /// with one column per engine. Mismatched rows carry a `*`.
    pub fn to_text(&self) -> String {
        let header = [
            "n", "n^2", "divisors", "p", "predicted", "cyclotomic", "flat", "geometry", "oracle", "",
        ];
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let body: Vec<[String; 10]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.n.to_string(),
                    (r.n * r.n).to_string(),
                    crate::splitting::join(&r.divisors),
                    r.p.to_string(),
                    r.predicted.to_string(),
                    opt(r.cyclotomic),
                    opt(r.geometry_flat),
                    opt(r.geometry_full),
                    opt(r.oracle),
                    if r.prediction_mismatch { "*" } else { "" }.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for line in &body {
            for (w, cell) in widths.iter_mut().zip(line) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut emit = |cells: &[&str]| {
            let mut line = String::new();
            for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
                if i == 2 {
                    let _ = write!(line, "{cell:<w$}  ");
                } else {
                    let _ = write!(line, "{cell:>w$}  ");
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };
        emit(&header);
        for line in &body {
            emit(&line.each_ref().map(String::as_str));
        }
        if !self.flagged().is_empty() {
            out.push_str("* actual count differs from the predicted count\n");
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n", "cells", "divisors", "p", "predicted", "cyclotomic", "geometry_flat",
            "geometry_full", "oracle", "prediction_mismatch",
        ])
        .unwrap();
        let opt = |v: Option<usize>| v.map_or(String::new(), |v| v.to_string());
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                (r.n * r.n).to_string(),
                r.divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
                r.p.to_string(),
                r.predicted.to_string(),
                opt(r.cyclotomic),
                opt(r.geometry_flat),
                opt(r.geometry_full),
                opt(r.oracle),
                r.prediction_mismatch.to_string(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// One row per side length in `n_min..=n_max`, computed in parallel and
/// returned in order.
pub fn build_report(n_min: usize, n_max: usize, options: &ReportOptions) -> Result<Report> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= from <= to, got {n_min}..{n_max}"
        )));
    }
    let start = Instant::now();
    let rows = (n_min..=n_max)
        .into_par_iter()
        .map(|n| build_row(n, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report {
        rows,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predictions() {
        assert_eq!(predict(12), 21);
        assert_eq!(predict(16), 13);
        assert_eq!(predict(2), 1);
        for n in [2, 3, 5, 7] {
            assert_eq!(predict(n), 1);
        }
        for n in [4, 9] {
            assert_eq!(predict(n), 3);
        }
        for n in [6, 8, 10] {
            assert_eq!(predict(n), 7);
        }
    }

    #[test]
    fn small_rows_match_prediction() {
        let report = build_report(2, 7, &ReportOptions::default()).unwrap();
        let actual: Vec<_> = report.rows.iter().map(|r| r.oracle.unwrap()).collect();
        assert_eq!(actual, vec![1, 1, 3, 1, 7, 1]);
        assert!(report.flagged().is_empty());
    }

    #[test]
    fn nine_is_not_flagged() {
        let row = build_row(9, &ReportOptions::default()).unwrap();
        assert_eq!((row.predicted, row.actual()), (3, Some(3)));
        assert!(!row.prediction_mismatch);
    }

    #[test]
    fn skipping_the_oracle() {
        let options = ReportOptions {
            skip_oracle_above: Some(3),
            ..ReportOptions::default()
        };
        let row = build_row(4, &options).unwrap();
        assert_eq!(row.oracle, None);
        assert_eq!(row.cyclotomic, Some(3));
    }

    #[test]
    fn disagreement_is_an_error() {
        let good = Some(vec![Splitting::new(vec![0, 2], vec![0, 1])]);
        let bad = Some(vec![]);
        let err = compare(2, &[("x", &good), ("y", &bad), ("z", &None)]).unwrap_err();
        assert!(matches!(err, Error::EngineDisagreement { rows: 2, .. }));
        assert!(compare(2, &[("x", &good), ("z", &None), ("y", &good)]).is_ok());
    }

    #[test]
    fn bad_range() {
        assert!(build_report(1, 5, &ReportOptions::default()).is_err());
        assert!(build_report(6, 5, &ReportOptions::default()).is_err());
    }
}
