//! Čech cohomology of `O(d)` on `P^n`, one monomial weight at a time.
//!
//! On the standard cover `U_j = D(x_j)` the Čech differential preserves the
//! monomial weight, so the complex splits into one small complex per weight
//! vector `l`. The spot for a non-empty subset `S` carries the monomial iff
//! `l_j >= 0` for every `j` outside `S`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::braided::{h0, hn_top, LineBundle};
use crate::enumeration::render_vector;
use crate::error::{Error, Result};
use crate::exponents::{prime_power, PAdicFrac};
use crate::linalg::{self, Matrix};

pub const MAX_COMPLEX_DIM: usize = 6;
pub const MAX_CHECK_DIM: usize = 3;
pub const MAX_CHECK_GRADE: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<PAdicFrac>,
}

impl WeightVector {
    pub fn new(entries: Vec<PAdicFrac>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(Error::Arity {
                expected: 1,
                got: 0,
            });
        };
        if let Some(bad) = entries.iter().find(|e| e.prime() != first.prime()) {
            return Err(Error::PrimeMismatch(first.prime(), bad.prime()));
        }
        Ok(WeightVector { entries })
    }

    pub fn entries(&self) -> &[PAdicFrac] {
        &self.entries
    }

    pub fn prime(&self) -> u64 {
        self.entries[0].prime()
    }

    pub fn degree(&self) -> PAdicFrac {
        self.entries
            .iter()
            .skip(1)
            .fold(self.entries[0].clone(), |acc, e| &acc + e)
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if self.entries.len() != n + 1 {
            return Err(Error::Arity {
                expected: n + 1,
                got: self.entries.len(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_vector(&self.entries))
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Rank of each `H^k`, `k = 0..=n`, read off from the signs of the weight.
pub fn classify_weight(w: &WeightVector, n: usize) -> Result<Vec<usize>> {
    w.check_arity(n)?;
    let mut ranks = vec![0; n + 1];
    if w.entries.iter().all(|e| !e.is_negative()) {
        ranks[0] += 1;
    }
    if w.entries.iter().all(PAdicFrac::is_negative) {
        ranks[n] += 1;
    }
    Ok(ranks)
}

#[derive(Clone, Debug)]
pub struct CechComplex {
    n: usize,
    weight: WeightVector,
    spots: Vec<bool>,
    levels: Vec<Vec<usize>>,
    differentials: Vec<Matrix>,
}

impl CechComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    /// Whether the weight occurs on the intersection indexed by the bitmask.
    pub fn spot(&self, subset: usize) -> bool {
        self.spots.get(subset).copied().unwrap_or(false)
    }

    /// Present subsets of size `k + 1`, as bitmasks in increasing order.
    pub fn level(&self, k: usize) -> &[usize] {
        &self.levels[k]
    }

    /// `d_k : C^k -> C^{k+1}`, rows indexed by `level(k + 1)`.
    pub fn differential(&self, k: usize) -> &Matrix {
        &self.differentials[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }
}

pub fn build_complex(w: &WeightVector, n: usize) -> Result<CechComplex> {
    if n > MAX_COMPLEX_DIM {
        return Err(Error::DimensionCap(n, MAX_COMPLEX_DIM));
    }
    w.check_arity(n)?;
    let full = (1usize << (n + 1)) - 1;
    let nonneg = (0..=n)
        .filter(|&j| !w.entries[j].is_negative())
        .fold(0usize, |acc, j| acc | 1 << j);
    // every index outside S must carry a non-negative exponent
    let spots: Vec<bool> = (0..=full)
        .map(|s| s != 0 && (full & !s) & !nonneg == 0)
        .collect();
    let mut levels = vec![Vec::new(); n + 1];
    for s in 1..=full {
        if spots[s] {
            levels[s.count_ones() as usize - 1].push(s);
        }
    }
    let differentials: Vec<Matrix> = (0..n)
        .map(|k| {
            levels[k + 1]
                .iter()
                .map(|&t| {
                    let mut row = vec![BigRational::zero(); levels[k].len()];
                    let members = (0..=n).filter(|&j| t >> j & 1 == 1);
                    for (r, j) in members.enumerate() {
                        if let Ok(col) = levels[k].binary_search(&(t & !(1 << j))) {
                            let sign = if r % 2 == 0 {
                                BigRational::one()
                            } else {
                                -BigRational::one()
                            };
                            row[col] = sign;
                        }
                    }
                    row
                })
                .collect()
        })
        .collect();
    for k in 1..n {
        let dd = linalg::mul(
            &differentials[k],
            &differentials[k - 1],
            levels[k - 1].len(),
        );
        if !linalg::is_zero(&dd) {
            return Err(Error::NotAComplex(format!(
                "d{k} * d{} != 0 at weight {w}",
                k - 1
            )));
        }
    }
    Ok(CechComplex {
        n,
        weight: w.clone(),
        spots,
        levels,
        differentials,
    })
}

/// `rank H^k = dim C^k - rank d_k - rank d_{k-1}`.
pub fn cohomology_ranks(c: &CechComplex) -> Vec<usize> {
    let ranks: Vec<usize> = c.differentials.iter().map(linalg::rank).collect();
    (0..=c.n)
        .map(|k| {
            let out = ranks.get(k).copied().unwrap_or(0);
            let inc = if k == 0 { 0 } else { ranks[k - 1] };
            c.levels[k].len() - out - inc
        })
        .collect()
}

/// Weight vectors of the given degree whose entries are multiples of
/// `1/p^grade` lying in `[-bound, bound]`.
pub fn weights_of_degree(
    n: usize,
    degree: &PAdicFrac,
    grade: u32,
    bound: u64,
) -> Vec<WeightVector> {
    let p = degree.prime();
    let Some(total) = degree.scaled_to_grade(grade) else {
        return Vec::new();
    };
    let scale = prime_power(p, grade);
    let b = BigInt::from(bound) * &scale;
    let (Some(total), Some(b)) = (total.to_i64(), b.to_i64()) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fill(n + 1, total, b, &mut cur, &mut |v: &[i64]| {
        let entries = v
            .iter()
            .map(|&a| PAdicFrac::normalized(BigInt::from(a), grade, p))
            .collect();
        out.push(WeightVector { entries });
    });
    out
}

fn fill(len: usize, remaining: i64, b: i64, cur: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if cur.len() + 1 == len {
        if remaining.abs() <= b {
            cur.push(remaining);
            emit(cur);
            cur.pop();
        }
        return;
    }
    let left = (len - cur.len() - 1) as i64;
    let lo = (-b).max(remaining - left * b);
    let hi = b.min(remaining + left * b);
    for a in lo..=hi {
        cur.push(a);
        fill(len, remaining - a, b, cur, emit);
        cur.pop();
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeTotals {
    pub degree: PAdicFrac,
    pub weights: usize,
    /// Summed ranks of `H^k` over all weights.
    pub totals: Vec<usize>,
    pub expected: Vec<String>,
    pub matches_closed_form: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub weight: WeightVector,
    pub classified: Vec<usize>,
    pub computed: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CechReport {
    pub n: usize,
    pub p: u64,
    pub grade: u32,
    pub degrees: Vec<DegreeTotals>,
    pub counterexamples: Vec<Counterexample>,
}

impl CechReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty() && self.degrees.iter().all(|d| d.matches_closed_form)
    }

    pub fn weights_checked(&self) -> usize {
        self.degrees.iter().map(|d| d.weights).sum()
    }
}

/// Largest absolute value an entry needs: every weight carrying cohomology
/// has all entries of one sign, so `|entry| <= |degree|`.
fn entry_bound(degree: &PAdicFrac) -> u64 {
    let r = degree.to_rational().abs();
    r.ceil().to_integer().to_u64().unwrap_or(u64::MAX) + 1
}

/// Runs the sign classification and the exact rank computation on every
/// weight of each degree up to `grade`, and compares the summed ranks with
/// the closed-form counts.
pub fn verify_theorems(n: usize, degrees: &[PAdicFrac], grade: u32) -> Result<CechReport> {
    if n > MAX_CHECK_DIM {
        return Err(Error::DimensionCap(n, MAX_CHECK_DIM));
    }
    if grade > MAX_CHECK_GRADE {
        return Err(Error::DimensionCap(
            grade as usize,
            MAX_CHECK_GRADE as usize,
        ));
    }
    let p = match degrees.first() {
        Some(d) => d.prime(),
        None => {
            return Ok(CechReport {
                n,
                p: 0,
                grade,
                degrees: Vec::new(),
                counterexamples: Vec::new(),
            })
        }
    };
    let mut report = CechReport {
        n,
        p,
        grade,
        degrees: Vec::new(),
        counterexamples: Vec::new(),
    };
    for d in degrees {
        if d.prime() != p {
            return Err(Error::PrimeMismatch(p, d.prime()));
        }
        let weights = weights_of_degree(n, d, grade, entry_bound(d));
        let results: Vec<(Vec<usize>, Vec<usize>, &WeightVector)> = weights
            .par_iter()
            .map(|w| {
                let classified = classify_weight(w, n)?;
                let computed = cohomology_ranks(&build_complex(w, n)?);
                Ok((classified, computed, w))
            })
            .collect::<Result<_>>()?;
        let mut totals = vec![0usize; n + 1];
        for (classified, computed, w) in results {
            for (t, c) in totals.iter_mut().zip(&computed) {
                *t += c;
            }
            if classified != computed {
                report.counterexamples.push(Counterexample {
                    weight: w.clone(),
                    classified,
                    computed,
                });
            }
        }
        let expected = expected_totals(n, d, grade)?;
        let matches_closed_form = totals
            .iter()
            .zip(&expected)
            .all(|(t, e)| BigInt::from(*t) == *e);
        report.degrees.push(DegreeTotals {
            degree: d.clone(),
            weights: weights.len(),
            totals,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            matches_closed_form,
        });
    }
    Ok(report)
}

/// `[h0, 0, .., 0, hn]` at the grade, from the braided closed forms.
fn expected_totals(n: usize, d: &PAdicFrac, grade: u32) -> Result<Vec<BigInt>> {
    let bundle = LineBundle::new(n, d.clone());
    let finite = |v: crate::braided::ExtInt| v.as_finite().cloned().ok_or(Error::Overflow);
    let a = finite(h0(&bundle, 1)?.at(grade)?)?;
    let b = finite(hn_top(&bundle, 1)?.at(grade)?)?;
    let mut out = vec![BigInt::zero(); n + 1];
    out[0] += a;
    out[n] += b;
    Ok(out)
}
