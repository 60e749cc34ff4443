//! Braided dimensions: per-grade dimension tuples of line-bundle cohomology.
//!
//! A tuple is labelled by absolute "power of p" grades. Index `j` of the
//! materialized values sits at grade `offset + j`; grades below the offset
//! read as zero. A closed-form [`Generator`] extends a tuple on demand.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::enumeration::{count_h0_monomials, count_hn_monomials};
use crate::error::{Error, Result};
use crate::exponents::PAdicFrac;

/// Integer or `+inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtInt {
    Finite(BigInt),
    PosInf,
}

impl ExtInt {
    pub fn zero() -> Self {
        ExtInt::Finite(BigInt::zero())
    }

    pub fn finite(v: impl Into<BigInt>) -> Self {
        ExtInt::Finite(v.into())
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::PosInf => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtInt::Finite(v) if v.is_zero())
    }

    pub fn add(&self, rhs: &ExtInt) -> Result<ExtInt> {
        Ok(match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::PosInf,
        })
    }

    pub fn sub(&self, rhs: &ExtInt) -> Result<ExtInt> {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => Ok(ExtInt::Finite(a - b)),
            (ExtInt::PosInf, ExtInt::Finite(_)) => Ok(ExtInt::PosInf),
            _ => Err(Error::IndeterminateInfinity),
        }
    }

    pub fn mul(&self, rhs: &ExtInt) -> Result<ExtInt> {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => Ok(ExtInt::Finite(a * b)),
            (ExtInt::PosInf, ExtInt::PosInf) => Ok(ExtInt::PosInf),
            (ExtInt::PosInf, ExtInt::Finite(v)) | (ExtInt::Finite(v), ExtInt::PosInf) => {
                if v.is_positive() {
                    Ok(ExtInt::PosInf)
                } else {
                    Err(Error::IndeterminateProduct)
                }
            }
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => match v.to_i64() {
                Some(x) => s.serialize_i64(x),
                None => s.serialize_str(&v.to_string()),
            },
            ExtInt::PosInf => s.serialize_str("inf"),
        }
    }
}

impl From<BigInt> for ExtInt {
    fn from(v: BigInt) -> Self {
        ExtInt::Finite(v)
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v.into())
    }
}

/// Closed form of a tuple, evaluated at absolute grades.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Zero,
    Const(BigInt),
    /// Global sections of `O(degree)` on `P^n`.
    H0 {
        n: usize,
        degree: PAdicFrac,
    },
    /// Top cohomology of `O(-m)` on `P^n`.
    Hn {
        n: usize,
        m: PAdicFrac,
    },
    Sum(Box<Generator>, Box<Generator>),
    Diff(Box<Generator>, Box<Generator>),
    Product(Box<Generator>, Box<Generator>),
}

impl Generator {
    pub fn eval(&self, grade: u32) -> Result<ExtInt> {
        let below = |d: &PAdicFrac| d.pexp() > grade;
        match self {
            Generator::Zero => Ok(ExtInt::zero()),
            Generator::Const(c) => Ok(ExtInt::Finite(c.clone())),
            Generator::H0 { n, degree } => {
                if below(degree) || degree.is_negative() {
                    return Ok(ExtInt::zero());
                }
                count_h0_monomials(*n, degree, grade).map(ExtInt::Finite)
            }
            Generator::Hn { n, m } => {
                if below(m) || !m.is_positive() {
                    return Ok(ExtInt::zero());
                }
                count_hn_monomials(*n, m, grade).map(ExtInt::Finite)
            }
            Generator::Sum(a, b) => a.eval(grade)?.add(&b.eval(grade)?),
            Generator::Diff(a, b) => a.eval(grade)?.sub(&b.eval(grade)?),
            Generator::Product(a, b) => a.eval(grade)?.mul(&b.eval(grade)?),
        }
    }

    /// `+inf` for a leaf that is nonzero at infinitely many grades.
    fn total_rank(&self) -> Option<ExtInt> {
        match self {
            Generator::Zero => Some(ExtInt::zero()),
            Generator::Const(c) if c.is_zero() => Some(ExtInt::zero()),
            Generator::Const(_) => Some(ExtInt::PosInf),
            Generator::H0 { degree, .. } if degree.is_negative() => Some(ExtInt::zero()),
            Generator::Hn { m, .. } if !m.is_positive() => Some(ExtInt::zero()),
            Generator::H0 { .. } | Generator::Hn { .. } => Some(ExtInt::PosInf),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Zero => f.write_str("0"),
            Generator::Const(c) => write!(f, "const({c})"),
            Generator::H0 { n, degree } => write!(f, "h0(n={n},d={degree})"),
            Generator::Hn { n, m } => write!(f, "hn(n={n},m={m})"),
            Generator::Sum(a, b) => write!(f, "({a} + {b})"),
            Generator::Diff(a, b) => write!(f, "({a} - {b})"),
            Generator::Product(a, b) => write!(f, "({a} * {b})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BraidedDim {
    prime: u64,
    offset: u32,
    values: Vec<ExtInt>,
    generator: Option<Generator>,
}

impl BraidedDim {
    /// A tuple with no closed form; it cannot be extended past its values.
    pub fn from_values(prime: u64, offset: u32, values: Vec<ExtInt>) -> Self {
        BraidedDim {
            prime,
            offset,
            values,
            generator: None,
        }
    }

    pub fn from_generator(
        prime: u64,
        offset: u32,
        generator: Generator,
        grades: usize,
    ) -> Result<Self> {
        let values = (0..grades)
            .map(|j| generator.eval(offset + j as u32))
            .collect::<Result<_>>()?;
        Ok(BraidedDim {
            prime,
            offset,
            values,
            generator: Some(generator),
        })
    }

    /// Values computed elsewhere, paired with the closed form they follow.
    pub(crate) fn from_parts(
        prime: u64,
        offset: u32,
        values: Vec<ExtInt>,
        generator: Generator,
    ) -> Self {
        BraidedDim {
            prime,
            offset,
            values,
            generator: Some(generator),
        }
    }

    pub fn zero(prime: u64, grades: usize) -> Self {
        BraidedDim {
            prime,
            offset: 0,
            values: vec![ExtInt::zero(); grades],
            generator: Some(Generator::Zero),
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn offset(&self) -> u32 {
        self.offset
    }

    pub fn values(&self) -> &[ExtInt] {
        &self.values
    }

    pub fn generator(&self) -> Option<&Generator> {
        self.generator.as_ref()
    }

    /// First absolute grade past the materialized values.
    pub fn horizon(&self) -> u32 {
        self.offset + self.values.len() as u32
    }

    /// Value at an absolute grade, using the generator past the horizon.
    pub fn at(&self, grade: u32) -> Result<ExtInt> {
        if grade < self.offset {
            return Ok(ExtInt::zero());
        }
        if let Some(v) = self.values.get((grade - self.offset) as usize) {
            return Ok(v.clone());
        }
        match &self.generator {
            Some(g) => g.eval(grade),
            None => Err(Error::BeyondHorizon(grade)),
        }
    }

    /// Materializes values up to (excluding) the absolute grade `horizon`.
    pub fn extend_to(&mut self, horizon: u32) -> Result<()> {
        while self.horizon() < horizon {
            let v = self.at(self.horizon())?;
            self.values.push(v);
        }
        Ok(())
    }

    fn check_prime(&self, rhs: &BraidedDim) -> Result<()> {
        if self.prime != rhs.prime {
            return Err(Error::PrimeMismatch(self.prime, rhs.prime));
        }
        Ok(())
    }

    fn combine(
        &self,
        rhs: &BraidedDim,
        offset: u32,
        op: impl Fn(&ExtInt, &ExtInt) -> Result<ExtInt>,
        gen: impl Fn(Box<Generator>, Box<Generator>) -> Generator,
    ) -> Result<BraidedDim> {
        self.check_prime(rhs)?;
        let horizon = self.horizon().min(rhs.horizon()).max(offset);
        let values = (offset..horizon)
            .map(|g| op(&self.at(g)?, &rhs.at(g)?))
            .collect::<Result<_>>()?;
        let generator = match (&self.generator, &rhs.generator) {
            (Some(a), Some(b)) => Some(gen(Box::new(a.clone()), Box::new(b.clone()))),
            _ => None,
        };
        Ok(BraidedDim {
            prime: self.prime,
            offset,
            values,
            generator,
        })
    }

    pub fn add(&self, rhs: &BraidedDim) -> Result<BraidedDim> {
        self.combine(
            rhs,
            self.offset.min(rhs.offset),
            ExtInt::add,
            Generator::Sum,
        )
    }

    pub fn sub(&self, rhs: &BraidedDim) -> Result<BraidedDim> {
        self.combine(
            rhs,
            self.offset.min(rhs.offset),
            ExtInt::sub,
            Generator::Diff,
        )
    }

    /// Grade-wise product, the dimension of a tensor product.
    pub fn mul(&self, rhs: &BraidedDim) -> Result<BraidedDim> {
        self.combine(
            rhs,
            self.offset.max(rhs.offset),
            ExtInt::mul,
            Generator::Product,
        )
    }

    /// Compares the two tuples on absolute grades `0..horizon`.
    pub fn eq_up_to(&self, rhs: &BraidedDim, horizon: u32) -> Result<bool> {
        self.check_prime(rhs)?;
        for g in 0..horizon {
            if self.at(g)? != rhs.at(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum over all grades: `+inf` for non-degenerate leaf generators, `None`
    /// when no closed form decides it.
    pub fn total_rank(&self) -> Option<ExtInt> {
        self.generator.as_ref().and_then(Generator::total_rank)
    }

    /// Consecutive differences: what first appears at each grade.
    pub fn reduced(&self) -> Result<BraidedDim> {
        let mut values = Vec::with_capacity(self.values.len());
        for (j, v) in self.values.iter().enumerate() {
            values.push(if j == 0 {
                v.clone()
            } else {
                v.sub(&self.values[j - 1])?
            });
        }
        Ok(BraidedDim {
            values,
            generator: None,
            ..self.clone()
        })
    }
}

impl fmt::Display for BraidedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({}, ...)", parts.join(", "))
    }
}

impl Serialize for BraidedDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BraidedDim", 4)?;
        st.serialize_field("p", &self.prime)?;
        st.serialize_field("offset", &self.offset)?;
        st.serialize_field("grades", &self.values)?;
        st.serialize_field("generator", &self.generator.as_ref().map(|g| g.to_string()))?;
        st.end()
    }
}

/// `O(degree)` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundle {
    pub n: usize,
    pub degree: PAdicFrac,
}

impl LineBundle {
    pub fn new(n: usize, degree: PAdicFrac) -> Self {
        LineBundle { n, degree }
    }

    pub fn prime(&self) -> u64 {
        self.degree.prime()
    }

    pub fn is_ample(&self) -> bool {
        self.degree.is_positive()
    }
}

pub fn h0(bundle: &LineBundle, grades: usize) -> Result<BraidedDim> {
    let d = &bundle.degree;
    if d.is_negative() {
        return Ok(BraidedDim::zero(d.prime(), grades));
    }
    let gen = Generator::H0 {
        n: bundle.n,
        degree: d.clone(),
    };
    BraidedDim::from_generator(d.prime(), d.pexp(), gen, grades)
}

pub fn hn_top(bundle: &LineBundle, grades: usize) -> Result<BraidedDim> {
    let d = &bundle.degree;
    if !d.is_negative() {
        return Ok(BraidedDim::zero(d.prime(), grades));
    }
    let gen = Generator::Hn { n: bundle.n, m: -d };
    BraidedDim::from_generator(d.prime(), d.pexp(), gen, grades)
}

/// Intermediate cohomology `H^i` for `0 < i < n`, which always vanishes.
pub fn middle_vanishing(n: usize, i: usize, p: u64, grades: usize) -> Result<BraidedDim> {
    if i == 0 || i >= n {
        return Err(Error::NotMiddleIndex { index: i, n });
    }
    Ok(BraidedDim::zero(p, grades))
}

/// All cohomology groups `H^0..=H^n`, one tuple per index.
pub fn cohomology(bundle: &LineBundle, grades: usize) -> Result<Vec<BraidedDim>> {
    let p = bundle.prime();
    let top = hn_top(bundle, grades)?;
    let bottom = h0(bundle, grades)?;
    if bundle.n == 0 {
        return Ok(vec![bottom.add(&top)?]);
    }
    let mut out = vec![bottom];
    for i in 1..bundle.n {
        out.push(middle_vanishing(bundle.n, i, p, grades)?);
    }
    out.push(top);
    Ok(out)
}

/// `chi_j = h0_j + (-1)^n hn_j`.
pub fn euler(bundle: &LineBundle, grades: usize) -> Result<BraidedDim> {
    let a = h0(bundle, grades)?;
    let b = hn_top(bundle, grades)?;
    let mut chi = if bundle.n.is_multiple_of(2) {
        a.add(&b)?
    } else {
        a.sub(&b)?
    };
    let offset = bundle.degree.pexp();
    if chi.offset < offset {
        let skip = (offset - chi.offset) as usize;
        chi.values.drain(..skip.min(chi.values.len()));
        chi.offset = offset;
        chi.extend_to(offset + grades as u32)?;
    }
    Ok(chi)
}

/// Cohomology of a product from the cohomology of its factors:
/// `H^i = sum_j hA[j] * hB[i-j]`, grade by grade.
pub fn kunneth(ha: &[BraidedDim], hb: &[BraidedDim]) -> Result<Vec<BraidedDim>> {
    let first = ha.first().or(hb.first());
    let Some(first) = first else {
        return Ok(Vec::new());
    };
    let horizon = first.horizon();
    for d in ha.iter().chain(hb) {
        if d.horizon() != horizon {
            return Err(Error::HorizonMismatch(horizon, d.horizon()));
        }
    }
    if ha.is_empty() || hb.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(ha.len() + hb.len() - 1);
    for i in 0..ha.len() + hb.len() - 1 {
        let mut acc: Option<BraidedDim> = None;
        for j in 0..=i {
            let (Some(a), Some(b)) = (ha.get(j), hb.get(i - j)) else {
                continue;
            };
            let term = a.mul(b)?;
            acc = Some(match acc {
                None => term,
                Some(s) => s.add(&term)?,
            });
        }
        let mut sum = acc.expect("index range always has a term");
        sum.extend_to(horizon)?;
        out.push(sum);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_h0_monomials, enumerate_hn_monomials};
    use proptest::prelude::*;

    fn q(a: i64, b: i64, p: u64) -> PAdicFrac {
        PAdicFrac::new(a, b, p).unwrap()
    }

    fn ints(d: &BraidedDim) -> Vec<i64> {
        d.values()
            .iter()
            .map(|v| v.as_finite().unwrap().to_i64().unwrap())
            .collect()
    }

    fn lb(n: usize, a: i64, b: i64, p: u64) -> LineBundle {
        LineBundle::new(n, q(a, b, p))
    }

    #[test]
    fn h0_examples() {
        assert_eq!(ints(&h0(&lb(1, 2, 0, 3), 3).unwrap()), vec![3, 7, 19]);
        let frac = h0(&lb(1, 2, 1, 3), 3).unwrap();
        assert_eq!(frac.offset(), 1);
        assert_eq!(ints(&frac), vec![3, 7, 19]);
        assert_eq!(frac.at(0).unwrap(), ExtInt::zero());
        assert_eq!(ints(&h0(&lb(2, 0, 0, 5), 4).unwrap()), vec![1, 1, 1, 1]);
        assert_eq!(ints(&h0(&lb(2, -1, 0, 5), 3).unwrap()), vec![0, 0, 0]);
    }

    #[test]
    fn hn_examples() {
        assert_eq!(ints(&hn_top(&lb(1, -5, 0, 3), 3).unwrap()), vec![4, 14, 44]);
        assert_eq!(
            ints(&hn_top(&lb(1, -1, 0, 3), 4).unwrap()),
            vec![0, 2, 8, 26]
        );
        assert_eq!(
            ints(&hn_top(&lb(1, -3, 1, 3), 4).unwrap()),
            vec![0, 2, 8, 26]
        );
        assert_eq!(ints(&hn_top(&lb(2, -3, 0, 2), 1).unwrap()), vec![1]);
        assert_eq!(ints(&hn_top(&lb(2, 3, 0, 2), 2).unwrap()), vec![0, 0]);
    }

    #[test]
    fn middle_examples() {
        for (n, i) in [(2, 1), (3, 2), (5, 1)] {
            assert_eq!(ints(&middle_vanishing(n, i, 3, 3).unwrap()), vec![0, 0, 0]);
        }
        assert!(matches!(
            middle_vanishing(2, 2, 3, 3),
            Err(Error::NotMiddleIndex { .. })
        ));
        assert!(middle_vanishing(2, 0, 3, 3).is_err());
    }

    #[test]
    fn tuple_arith_examples() {
        let a = hn_top(&lb(1, -5, 0, 3), 3).unwrap();
        let b = hn_top(&lb(1, -2, 0, 3), 3).unwrap();
        let c = hn_top(&lb(1, -3, 0, 3), 3).unwrap();
        assert_eq!(ints(&a.sub(&b).unwrap().sub(&c).unwrap()), vec![1, 1, 1]);

        let x = h0(&lb(1, 2, 0, 3), 3).unwrap();
        assert_eq!(ints(&x.add(&BraidedDim::zero(3, 3)).unwrap()), ints(&x));

        let ones = BraidedDim::from_values(3, 0, vec![1.into(), 1.into()]);
        assert_eq!(ints(&ones.add(&ones).unwrap()), vec![2, 2]);
    }

    #[test]
    fn infinity_rules() {
        let inf = BraidedDim::from_values(2, 0, vec![ExtInt::PosInf]);
        assert!(matches!(inf.sub(&inf), Err(Error::IndeterminateInfinity)));
        assert_eq!(inf.add(&inf).unwrap().values()[0], ExtInt::PosInf);
        let zero = BraidedDim::from_values(2, 0, vec![0.into()]);
        assert!(matches!(inf.mul(&zero), Err(Error::IndeterminateProduct)));
        assert_eq!(serde_json::to_string(&ExtInt::PosInf).unwrap(), "\"inf\"");
    }

    #[test]
    fn mixed_offsets_align_on_absolute_grades() {
        let frac = h0(&lb(1, 2, 1, 3), 2).unwrap();
        let int = h0(&lb(1, 1, 0, 3), 3).unwrap();
        let s = int.add(&frac).unwrap();
        assert_eq!(s.offset(), 0);
        // grade 0: 2 + 0, grade 1: 4 + 3, grade 2: 10 + 7
        assert_eq!(ints(&s), vec![2, 7, 17]);
        assert_eq!(int.mul(&frac).unwrap().offset(), 1);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(
            ints(&euler(&lb(1, -5, 0, 3), 3).unwrap()),
            vec![-4, -14, -44]
        );
        assert_eq!(ints(&euler(&lb(1, 0, 0, 3), 3).unwrap()), vec![1, 1, 1]);
        assert_eq!(ints(&euler(&lb(2, 1, 0, 2), 2).unwrap()), vec![3, 6]);
        let frac = euler(&lb(1, -2, 1, 3), 2).unwrap();
        assert_eq!(frac.offset(), 1);
        assert_eq!(ints(&frac), vec![-1, -5]);
    }

    #[test]
    fn kunneth_examples() {
        let a = cohomology(&lb(1, 1, 0, 3), 3).unwrap();
        let prod = kunneth(&a, &a).unwrap();
        assert_eq!(prod.len(), 3);
        assert_eq!(ints(&prod[0]), vec![4, 16, 100]);
        assert_eq!(ints(&prod[2]), vec![0, 0, 0]);

        let o = cohomology(&lb(1, 0, 0, 3), 3).unwrap();
        let prod = kunneth(&o, &o).unwrap();
        assert_eq!(ints(&prod[0]), vec![1, 1, 1]);
        assert_eq!(ints(&prod[1]), vec![0, 0, 0]);
        assert_eq!(ints(&prod[2]), vec![0, 0, 0]);

        let m = cohomology(&lb(1, -2, 0, 3), 2).unwrap();
        let prod = kunneth(&m, &m).unwrap();
        assert_eq!(ints(&prod[2]), vec![1, 25]);

        let short = cohomology(&lb(1, 0, 0, 3), 2).unwrap();
        assert!(matches!(
            kunneth(&o, &short),
            Err(Error::HorizonMismatch(3, 2))
        ));
    }

    #[test]
    fn total_rank_and_horizon() {
        assert_eq!(
            h0(&lb(1, 2, 0, 3), 2).unwrap().total_rank(),
            Some(ExtInt::PosInf)
        );
        assert_eq!(BraidedDim::zero(3, 2).total_rank(), Some(ExtInt::zero()));
        let raw = BraidedDim::from_values(3, 0, vec![1.into()]);
        assert_eq!(raw.total_rank(), None);
        assert!(matches!(raw.at(4), Err(Error::BeyondHorizon(4))));
        let mut g = h0(&lb(1, 2, 0, 3), 1).unwrap();
        g.extend_to(3).unwrap();
        assert_eq!(ints(&g), vec![3, 7, 19]);
        let other = h0(&lb(1, 2, 0, 3), 5).unwrap();
        assert!(g.eq_up_to(&other, 6).unwrap());
    }

    #[test]
    fn reduced_and_json() {
        let d = h0(&lb(1, 2, 0, 3), 3).unwrap();
        assert_eq!(ints(&d.reduced().unwrap()), vec![3, 4, 12]);
        let js = serde_json::to_string(&d).unwrap();
        assert_eq!(
            js,
            r#"{"p":3,"offset":0,"grades":[3,7,19],"generator":"h0(n=1,d=2)"}"#
        );
    }

    #[test]
    fn euler_difference_is_constant() {
        for p in [2u64, 3] {
            for s in 1..=4 {
                for t in 1..=4 {
                    let h = |d: i64| hn_top(&lb(1, -d, 0, p), 4).unwrap();
                    let diff = h(s + t).sub(&h(s)).unwrap().sub(&h(t)).unwrap();
                    assert_eq!(ints(&diff), vec![1, 1, 1, 1], "p={p} s={s} t={t}");
                    let c = |d: i64| euler(&lb(1, -d, 0, p), 4).unwrap();
                    let chi = c(s + t).sub(&c(s)).unwrap().sub(&c(t)).unwrap();
                    assert_eq!(ints(&chi), vec![-1, -1, -1, -1]);
                }
            }
        }
    }

    #[test]
    fn grade_zero_is_classical() {
        use num_integer::binomial;
        for n in 1..=4usize {
            for d in 0..=5i64 {
                let v = ints(&h0(&lb(n, d, 0, 2), 1).unwrap())[0];
                assert_eq!(v, binomial(d + n as i64, n as i64));
            }
            for m in 1..=6i64 {
                let v = ints(&hn_top(&lb(n, -m, 0, 3), 1).unwrap())[0];
                let want = if m - 1 < n as i64 {
                    0
                } else {
                    binomial(m - 1, n as i64)
                };
                assert_eq!(v, want);
            }
        }
    }

    proptest! {
        #[test]
        fn generators_match_enumeration(n in 0usize..3, d in 0i64..5, p in prop::sample::select(vec![2u64, 3]), j in 0u32..3) {
            let deg = q(d, 0, p);
            let dim = h0(&LineBundle::new(n, deg.clone()), 3).unwrap();
            let brute = enumerate_h0_monomials(n, &deg, j).unwrap().len() as i64;
            prop_assert_eq!(dim.at(j).unwrap(), ExtInt::from(brute));
            if d > 0 {
                let top = hn_top(&LineBundle::new(n, -&deg), 3).unwrap();
                let brute = enumerate_hn_monomials(n, &deg, j).unwrap().len() as i64;
                prop_assert_eq!(top.at(j).unwrap(), ExtInt::from(brute));
            }
        }

        #[test]
        fn fractional_shift(n in 1usize..4, m in 0i64..6, k in 1i64..3, p in prop::sample::select(vec![2u64, 3, 5])) {
            prop_assume!(m % p as i64 != 0);
            let frac = h0(&LineBundle::new(n, q(m, k, p)), 3).unwrap();
            let int = h0(&LineBundle::new(n, q(m, 0, p)), 3).unwrap();
            prop_assert_eq!(frac.offset(), k as u32);
            prop_assert_eq!(frac.values(), int.values());
        }

        #[test]
        fn materialized_agree_with_generator(n in 0usize..4, a in -6i64..6, b in 0i64..2, p in prop::sample::select(vec![2u64, 3])) {
            let bundle = LineBundle::new(n, q(a, b, p));
            for dim in cohomology(&bundle, 3).unwrap().into_iter().chain([euler(&bundle, 3).unwrap()]) {
                if let Some(g) = dim.generator() {
                    for (j, v) in dim.values().iter().enumerate() {
                        prop_assert_eq!(v, &g.eval(dim.offset() + j as u32).unwrap());
                    }
                }
            }
        }
    }
}
