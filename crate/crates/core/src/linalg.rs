//! Exact rank of sparse integer matrices.
//!
//! Rows are reduced one at a time against an echelon basis using
//! fraction-free updates (`a*r - b*p`) followed by division by the row
//! content, so every intermediate value is an exact integer and the rank is
//! the rank over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, value)` pairs with strictly increasing columns and
/// no zero values.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Builds a sparse row from unsorted integer entries, summing duplicates.
pub fn sparse_row<I>(entries: I) -> SparseRow
where
    I: IntoIterator<Item = (usize, i64)>,
{
    let mut v: Vec<(usize, i64)> = entries.into_iter().collect();
    v.sort_unstable_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += x,
            _ => out.push((c, BigInt::from(x))),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Incremental row-echelon basis over the rationals.
#[derive(Debug, Default)]
pub struct EchelonBasis {
    pivots: HashMap<usize, SparseRow>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns true if it was independent of the rows so far.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    normalize(&mut row);
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    let pivot_val = &pivot[0].1;
                    let g = lead_val.gcd(pivot_val);
                    let a = pivot_val / &g;
                    let b = &lead_val / &g;
                    row = combine(&a, &row, &b, pivot);
                    normalize(&mut row);
                }
            }
        }
    }
}

/// `a*r - b*p`, dropping zeros.
fn combine(a: &BigInt, r: &SparseRow, b: &BigInt, p: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a * &r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &r[i - 1].1 - b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Rank over the rationals of the matrix with the given sparse rows.
pub fn rank<I>(rows: I) -> usize
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        rank(rows.iter().map(|r| sparse_row(r.iter().enumerate().map(|(c, &v)| (c, v)))))
    }

    #[test]
    fn small_ranks() {
        assert_eq!(dense_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(dense_rank(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(dense_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(dense_rank(&[vec![2, 4, 6], vec![3, 6, 9], vec![1, 0, 1]]), 2);
    }

    #[test]
    fn boundary_of_triangle_has_rank_two() {
        // edges 01, 02, 12 as rows over vertices
        let rows = [vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]];
        assert_eq!(dense_rank(&rows), 2);
    }

    #[test]
    fn duplicate_columns_are_summed() {
        let r = sparse_row([(3, 1), (1, 2), (3, -1)]);
        assert_eq!(r, vec![(1, BigInt::from(2))]);
    }

    #[test]
    fn vandermonde_is_full_rank() {
        let rows: Vec<Vec<i64>> = (1..=6).map(|x: i64| (0..6).map(|k| x.pow(k)).collect()).collect();
        assert_eq!(dense_rank(&rows), 6);
    }
}
