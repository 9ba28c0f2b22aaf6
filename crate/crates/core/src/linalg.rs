//! Exact rank of integer vectors by fraction-free elimination.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer vector: `(column, value)` pairs, strictly increasing in
/// column, no zero values.
pub type SparseRow = Vec<(usize, BigInt)>;

/// An incrementally built echelon basis. Rows are reduced against the
/// stored pivots using only integer operations and then divided by the gcd
/// of their entries, so no fractions ever appear.
#[derive(Default, Debug)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `row` to the span. Returns `false` when it was already in it.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = normalize(row);
        while let Some((lead, a)) = row.first().cloned() {
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return true;
            };
            let p = &pivot[0].1;
            let g = p.gcd(&a);
            row = combine(&row, &(p / &g), pivot, &(&a / &g));
            row = normalize(row);
        }
        false
    }
}

/// `x·a - y·b`, merging by column.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 <= y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 <= x[i].0);
        let col = if take_x { x[i].0 } else { y[j].0 };
        let mut v = BigInt::zero();
        if take_x {
            v += &x[i].1 * a;
            i += 1;
        }
        if take_y {
            v -= &y[j].1 * b;
            j += 1;
        }
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn normalize(mut row: SparseRow) -> SparseRow {
    row.retain(|(_, v)| !v.is_zero());
    let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
    row
}

/// Rank of a family of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Whether the rows are linearly independent over the rationals.
pub fn independent(rows: impl IntoIterator<Item = SparseRow>) -> bool {
    let mut e = Echelon::new();
    rows.into_iter().all(|r| e.insert(r))
}
