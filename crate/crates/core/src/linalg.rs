//! Exact matrices over Q: dense rank and an incremental sparse echelon form.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

pub type Matrix = Vec<Vec<BigRational>>;

/// Rank by Gaussian elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = a[r][c].recip();
        let pivot_row: Vec<BigRational> = a[r].iter().map(|x| x * &inv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        a[r] = pivot_row;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `a * b`, with `a` of shape `r x k` and `b` of shape `k x c`.
pub fn mul(a: &Matrix, b: &Matrix, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn is_zero(m: &Matrix) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}

/// Row-echelon basis built one sparse row at a time; rows are maps from
/// column to nonzero entry.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis and keeps it if it is independent.
    pub fn insert(&mut self, mut row: BTreeMap<usize, BigRational>) -> bool {
        row.retain(|_, v| !v.is_zero());
        while let Some((&c, lead)) = row.iter().next() {
            match self.pivots.get(&c) {
                Some(pivot) => {
                    let f = lead.clone();
                    for (&j, v) in pivot {
                        let e = row.entry(j).or_insert_with(BigRational::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            row.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = lead.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
        false
    }
}
