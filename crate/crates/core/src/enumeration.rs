//! Counting and listing graded monomials.
//!
//! At grade `i` a degree-`d` monomial in `n + 1` variables is a vector of
//! multiples of `1/p^i` summing to `d`; clearing denominators turns it into a
//! composition of `p^i * d`. Global sections use non-negative parts, top
//! cohomology uses strictly negative ones. Counts follow the cumulative
//! convention: a grade-`i` list repeats every monomial of lower grades.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exponents::PAdicFrac;

/// `C(a, k)`, zero when `a < k` (negative `a` included).
pub fn binomial(a: &BigInt, k: u32) -> BigInt {
    if a < &BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= a - BigInt::from(j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// All exponents `>= 0`: global sections.
    H0,
    /// All exponents `< 0`: top cohomology.
    Hn,
}

/// Weak compositions of `total` into `parts` non-negative parts, in descending
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Option<Vec<u64>>,
}

impl Compositions {
    pub fn new(total: u64, parts: usize) -> Self {
        let current = match parts {
            0 if total == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut v = vec![0; parts];
                v[0] = total;
                Some(v)
            }
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.take()?;
        let k = out.len();
        if k >= 2 {
            if let Some(j) = (0..k - 1).rev().find(|&j| out[j] > 0) {
                let mut next = out.clone();
                let tail: u64 = next[j + 1..].iter().sum();
                next[j] -= 1;
                next[j + 1] = tail + 1;
                for x in &mut next[j + 2..] {
                    *x = 0;
                }
                self.current = Some(next);
            }
        }
        Some(out)
    }
}

/// Monomials of one degree at one grade, kept as integer compositions of
/// `p^grade * degree` and expanded to exponent vectors on request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub n: usize,
    pub degree: PAdicFrac,
    pub grade: u32,
    pub sign: Sign,
    scaled: Vec<Vec<i64>>,
}

impl GradedPiece {
    pub fn len(&self) -> usize {
        self.scaled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaled.is_empty()
    }

    /// Exponent vectors with denominators cleared by `p^grade`, as in the
    /// "power of p" tables.
    pub fn scaled(&self) -> &[Vec<i64>] {
        &self.scaled
    }

    pub fn monomials(&self) -> Vec<Vec<PAdicFrac>> {
        self.scaled.iter().map(|v| self.expand(v)).collect()
    }

    fn expand(&self, v: &[i64]) -> Vec<PAdicFrac> {
        let p = self.degree.prime();
        v.iter()
            .map(|&a| PAdicFrac::normalized(BigInt::from(a), self.grade, p))
            .collect()
    }

    /// Keeps only monomials that first appear at this grade.
    pub fn reduced(&self) -> GradedPiece {
        let scaled = self
            .scaled
            .iter()
            .filter(|v| self.grade == 0 || self.expand(v).iter().any(|e| e.pexp() == self.grade))
            .cloned()
            .collect();
        GradedPiece {
            scaled,
            ..self.clone()
        }
    }

    pub fn contains(&self, exps: &[PAdicFrac]) -> bool {
        if exps.len() != self.n + 1 {
            return false;
        }
        let scaled: Option<Vec<i64>> = exps
            .iter()
            .map(|e| e.scaled_to_grade(self.grade).and_then(|a| a.to_i64()))
            .collect();
        match scaled {
            Some(v) => self.scaled.binary_search_by(|w| v.cmp(w)).is_ok(),
            None => false,
        }
    }
}

pub(crate) fn render_vector(v: &[PAdicFrac]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}

impl Serialize for GradedPiece {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.scaled.len()))?;
        for v in &self.scaled {
            seq.serialize_element(&render_vector(&self.expand(v)))?;
        }
        seq.end()
    }
}

fn scaled_degree(d: &PAdicFrac, grade: u32) -> Result<BigInt> {
    d.scaled_to_grade(grade)
        .ok_or_else(|| Error::GradeTooSmall {
            degree: d.to_string(),
            grade,
        })
}

/// Number of degree-`d` monomials at grade `i` with non-negative exponents:
/// `C(p^i d + n, n)`.
pub fn count_h0_monomials(n: usize, d: &PAdicFrac, grade: u32) -> Result<BigInt> {
    let total = scaled_degree(d, grade)?;
    if total.is_negative() {
        return Err(Error::DegreeOutOfRange(
            d.to_string(),
            "must be non-negative",
        ));
    }
    Ok(binomial(&(total + BigInt::from(n)), n as u32))
}

/// Number of degree-`-m` monomials at grade `i` with strictly negative
/// exponents: `C(p^i m - 1, n)`.
pub fn count_hn_monomials(n: usize, m: &PAdicFrac, grade: u32) -> Result<BigInt> {
    let total = scaled_degree(m, grade)?;
    if !total.is_positive() {
        return Err(Error::DegreeOutOfRange(m.to_string(), "must be positive"));
    }
    Ok(binomial(&(total - BigInt::one()), n as u32))
}

/// Monomials first appearing at this grade; grades too small for the degree
/// contribute nothing below.
pub fn count_reduced(sign: Sign, n: usize, d: &PAdicFrac, grade: u32) -> Result<BigInt> {
    let count = |g: u32| match sign {
        Sign::H0 => count_h0_monomials(n, d, g),
        Sign::Hn => count_hn_monomials(n, d, g),
    };
    let here = count(grade)?;
    if grade == 0 {
        return Ok(here);
    }
    match count(grade - 1) {
        Ok(prev) => Ok(here - prev),
        Err(Error::GradeTooSmall { .. }) => Ok(here),
        Err(e) => Err(e),
    }
}

fn as_u64(total: &BigInt) -> Result<u64> {
    total.to_u64().ok_or(Error::Overflow)
}

pub fn enumerate_h0_monomials(n: usize, d: &PAdicFrac, grade: u32) -> Result<GradedPiece> {
    count_h0_monomials(n, d, grade)?;
    let total = as_u64(&scaled_degree(d, grade)?)?;
    let scaled = Compositions::new(total, n + 1)
        .map(|v| v.into_iter().map(|a| a as i64).collect())
        .collect();
    Ok(GradedPiece {
        n,
        degree: d.clone(),
        grade,
        sign: Sign::H0,
        scaled,
    })
}

/// Negative monomials of degree `-m`, listed in descending order of the
/// (negative) exponent vectors.
pub fn enumerate_hn_monomials(n: usize, m: &PAdicFrac, grade: u32) -> Result<GradedPiece> {
    count_hn_monomials(n, m, grade)?;
    let total = as_u64(&scaled_degree(m, grade)?)?;
    let parts = n as u64 + 1;
    let mut scaled: Vec<Vec<i64>> = if total < parts {
        Vec::new()
    } else {
        Compositions::new(total - parts, n + 1)
            .map(|v| v.into_iter().map(|a| -(a as i64) - 1).collect())
            .collect()
    };
    scaled.reverse();
    Ok(GradedPiece {
        n,
        degree: -m,
        grade,
        sign: Sign::Hn,
        scaled,
    })
}
