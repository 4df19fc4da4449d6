//! Flagged semi-standard skew tableaux and the generating-function
//! definition of the flagged skew Schur polynomial.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partitions::{Flag, Partition, SkewShape};
use crate::polyring::{IntPolynomial, Integers, Monomial, SparsePoly};

/// A filling of λ/μ; `rows[i]` holds the entries of row i from left to
/// right, occupying columns μ_i..λ_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        SkewTableau {
            outer: shape.outer,
            inner: shape.inner,
            rows,
        }
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer.clone(), self.inner.clone())
    }

    /// Entry in row `i`, column `c` (both 0-based), if that box is filled.
    fn entry(&self, i: usize, c: usize) -> Option<usize> {
        let start = self.inner.part(i);
        if c < start {
            return None;
        }
        self.rows.get(i).and_then(|row| row.get(c - start)).copied()
    }

    /// Row lengths match λ/μ, rows weakly increase, columns strictly
    /// increase, and all entries are positive.
    pub fn is_semistandard(&self) -> bool {
        if !self.outer.contains(&self.inner) {
            return false;
        }
        let nrows = self.outer.len().max(self.rows.len());
        for i in 0..nrows {
            let expected = self.outer.part(i).saturating_sub(self.inner.part(i));
            let row = self.rows.get(i).map_or(&[][..], Vec::as_slice);
            if row.len() != expected {
                return false;
            }
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 {
                let start = self.inner.part(i);
                for (k, &value) in row.iter().enumerate() {
                    if let Some(above) = self.entry(i - 1, start + k) {
                        if above >= value {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `wt(T)`: multiplicity of each entry 1, 2, ..., up to the largest.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut wt = vec![0; max];
        for &v in self.rows.iter().flatten() {
            wt[v - 1] += 1;
        }
        wt
    }
}

/// Semi-standard, and every row-i entry lies in (a_i, b_i].
pub fn is_valid_flagged(tab: &SkewTableau, a: &Flag, b: &Flag) -> bool {
    if !tab.is_semistandard() {
        return false;
    }
    tab.rows.iter().enumerate().all(|(i, row)| {
        row.is_empty()
            || (i < a.len() && i < b.len() && row.iter().all(|&v| a[i] < v && v <= b[i]))
    })
}

/// Number of rows the flags must cover: the last row holding a box.
fn rows_in_use(shape: &SkewShape) -> usize {
    (0..shape.outer.len())
        .rev()
        .find(|&i| shape.outer.part(i) > shape.inner.part(i))
        .map_or(0, |i| i + 1)
}

/// Depth-first enumeration of `Tab(λ/μ; a, b)`, boxes filled row by row,
/// each box ranging over `[max(left, above + 1, a_i + 1), b_i]`. Tableaux
/// come out in lexicographic order of their row-major entry sequence.
pub struct FlaggedTableaux {
    shape: SkewShape,
    /// Boxes in row-major order as (row, column).
    boxes: Vec<(usize, usize)>,
    /// Index of the box directly above, when it belongs to the skew shape.
    above: Vec<Option<usize>>,
    lower: Vec<usize>,
    upper: Vec<usize>,
    filled: Vec<usize>,
    started: bool,
    done: bool,
}

impl FlaggedTableaux {
    fn bounds(&self, k: usize) -> (usize, usize) {
        let (row, col) = self.boxes[k];
        let mut lo = self.lower[row] + 1;
        if col > self.shape.inner.part(row) {
            lo = lo.max(self.filled[k - 1]);
        }
        if let Some(up) = self.above[k] {
            lo = lo.max(self.filled[up] + 1);
        }
        (lo, self.upper[row])
    }

    /// Fills the remaining boxes with their smallest admissible values,
    /// backtracking as needed. Returns false once the search is exhausted.
    fn descend(&mut self) -> bool {
        while self.filled.len() < self.boxes.len() {
            let (lo, hi) = self.bounds(self.filled.len());
            if lo <= hi {
                self.filled.push(lo);
            } else if !self.advance() {
                return false;
            }
        }
        true
    }

    /// Increments the deepest box that still has room, dropping the boxes
    /// after it.
    fn advance(&mut self) -> bool {
        while let Some(value) = self.filled.pop() {
            let k = self.filled.len();
            if value < self.upper[self.boxes[k].0] {
                self.filled.push(value + 1);
                return true;
            }
        }
        false
    }

    fn current(&self) -> SkewTableau {
        let nrows = self.shape.outer.len();
        let mut rows = vec![Vec::new(); nrows];
        for (&(row, _), &v) in self.boxes.iter().zip(&self.filled) {
            rows[row].push(v);
        }
        SkewTableau::new(self.shape.clone(), rows)
    }
}

impl Iterator for FlaggedTableaux {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.descend()
        } else {
            self.advance() && self.descend()
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// Streams every tableau in `Tab(λ/μ; a, b)` once. Empty when μ ⊄ λ.
///
/// Fails if the flags do not cover every row that holds a box.
pub fn enumerate_flagged(shape: &SkewShape, a: &Flag, b: &Flag) -> Result<FlaggedTableaux> {
    let contained = shape.is_contained();
    let needed = if contained { rows_in_use(shape) } else { 0 };
    a.require_len(needed)?;
    b.require_len(needed)?;

    let mut boxes = Vec::new();
    let mut above = Vec::new();
    if contained {
        let mut row_start = vec![0; shape.outer.len()];
        for i in 0..shape.outer.len() {
            row_start[i] = boxes.len();
            for col in shape.inner.part(i)..shape.outer.part(i) {
                let up = (i > 0 && col >= shape.inner.part(i - 1) && col < shape.outer.part(i - 1))
                    .then(|| row_start[i - 1] + col - shape.inner.part(i - 1));
                boxes.push((i, col));
                above.push(up);
            }
        }
    }
    let lower = (0..needed).map(|i| a[i]).collect();
    let upper = (0..needed).map(|i| b[i]).collect();
    Ok(FlaggedTableaux {
        shape: shape.clone(),
        filled: Vec::with_capacity(boxes.len()),
        boxes,
        above,
        lower,
        upper,
        started: false,
        done: !contained,
    })
}

/// Σ_T x^{wt(T)} over `Tab(λ/μ; a, b)`, in `max(b)` variables.
pub fn schur_by_tableaux(shape: &SkewShape, a: &Flag, b: &Flag) -> Result<IntPolynomial> {
    let vars = b.max();
    let terms = enumerate_flagged(shape, a, b)?.map(|tab| {
        let mut exps = vec![0u32; vars];
        for &v in tab.rows.iter().flatten() {
            exps[v - 1] += 1;
        }
        (Monomial::from_exponents(&exps), BigInt::one())
    });
    Ok(SparsePoly::from_terms(Integers, vars, terms))
}
