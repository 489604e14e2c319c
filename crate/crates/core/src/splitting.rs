use std::fmt;

use serde::{Deserialize, Serialize};

/// A labeling of an `rows x cols` addition table: row labels `a`, column
/// labels `b`, both sorted ascending.
///
/// A *valid* splitting has every value `0..rows*cols` appearing exactly once
/// as `a_i + b_j`; use [`crate::oracle::verify_splitting`] to check that.
/// Field order makes the derived `Ord` compare dimensions, then `A`, then `B`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Splitting {
    pub rows: usize,
    pub cols: usize,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
}

impl Splitting {
    /// Sorts both label lists; dimensions are taken from their lengths.
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>) -> Self {
        a.sort_unstable();
        b.sort_unstable();
        Splitting {
            rows: a.len(),
            cols: b.len(),
            a,
            b,
        }
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The same table with rows and columns exchanged.
    pub fn transposed(&self) -> Splitting {
        Splitting {
            rows: self.cols,
            cols: self.rows,
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Square tables are oriented so that the label 1 sits among the column
    /// labels `B`; rectangular tables keep `A` as the `rows`-sized side.
    pub fn canonical(self) -> Splitting {
        if self.is_square() && self.a.binary_search(&1).is_ok() {
            self.transposed()
        } else {
            self
        }
    }

    /// `a_i + b_j` for the cell in row `i`, column `j`.
    pub fn cell(&self, i: usize, j: usize) -> usize {
        self.a[i] + self.b[j]
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A = {{{}}}, B = {{{}}}", join(&self.a), join(&self.b))
    }
}

pub(crate) fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moves_one_into_b() {
        let s = Splitting::new(vec![0, 1], vec![0, 2]).canonical();
        assert_eq!(s.a, vec![0, 2]);
        assert_eq!(s.b, vec![0, 1]);
    }

    #[test]
    fn rectangular_orientation_is_kept() {
        let s = Splitting::new(vec![0, 1], vec![0, 2, 4]).canonical();
        assert_eq!(s.rows, 2);
        assert_eq!(s.a, vec![0, 1]);
    }

    #[test]
    fn json_field_names() {
        let s = Splitting::new(vec![2, 0], vec![0, 1]);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["A"], serde_json::json!([0, 2]));
        assert_eq!(v["B"], serde_json::json!([0, 1]));
        assert_eq!(s.to_string(), "A = {0, 2}, B = {0, 1}");
    }
}
