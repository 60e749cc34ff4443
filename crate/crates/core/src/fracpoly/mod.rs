//! Polynomials whose exponents live in `Z[1/p]`, with exact rational
//! coefficients. Only finite sums are represented.

mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exponents::{check_prime, PAdicFrac};
use crate::intpoly::IntPoly;

pub type ExpVector = Vec<PAdicFrac>;

/// Default variable names: `x, y, z` up to three variables, `x0..x9` beyond.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        ["x", "y", "z"][..nvars]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracMonomial {
    pub coeff: BigRational,
    pub exps: ExpVector,
}

impl FracMonomial {
    /// The monomial `x_var` in `nvars` variables.
    pub fn variable(var: usize, nvars: usize, p: u64) -> Self {
        let exps = (0..nvars)
            .map(|j| PAdicFrac::int_unchecked(if j == var { 1 } else { 0 }, p))
            .collect();
        FracMonomial {
            coeff: BigRational::one(),
            exps,
        }
    }

    /// Coefficient one, exponents given.
    pub fn from_exps(exps: ExpVector) -> Self {
        FracMonomial {
            coeff: BigRational::one(),
            exps,
        }
    }

    /// `self^e` for a unit-coefficient monomial. A coefficient of `-1` raised to
    /// a fractional power is only defined for odd `p`.
    fn pow(&self, e: &PAdicFrac) -> Result<FracMonomial> {
        let exps = self.exps.iter().map(|x| x * e).collect();
        let coeff = if self.coeff.is_one() {
            BigRational::one()
        } else if self.coeff == -BigRational::one() {
            if e.prime() == 2 && !e.is_integer() {
                return Err(Error::NonMonomial);
            }
            if e.num().is_odd_int() {
                -BigRational::one()
            } else {
                BigRational::one()
            }
        } else {
            return Err(Error::NonMonomial);
        };
        Ok(FracMonomial { coeff, exps })
    }
}

trait OddInt {
    fn is_odd_int(&self) -> bool;
}

impl OddInt for BigInt {
    fn is_odd_int(&self) -> bool {
        num_integer::Integer::is_odd(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracPoly {
    nvars: usize,
    prime: u64,
    terms: BTreeMap<ExpVector, BigRational>,
}

impl FracPoly {
    pub fn zero(nvars: usize, p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(FracPoly {
            nvars,
            prime: p,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_monomials(
        nvars: usize,
        p: u64,
        monos: impl IntoIterator<Item = FracMonomial>,
    ) -> Result<Self> {
        let mut f = Self::zero(nvars, p)?;
        for m in monos {
            f.add_term(m.exps, m.coeff)?;
        }
        Ok(f)
    }

    pub fn parse(text: &str, nvars: usize, p: u64) -> Result<Self> {
        let names = default_names(nvars);
        let mut aliases: Vec<String> = names.clone();
        if nvars <= 3 {
            aliases.extend((0..nvars).map(|i| format!("x{i}")));
        }
        parse::parse_poly(text, &names, &aliases, p)
    }

    /// Parse with caller-chosen variable names, matched positionally.
    pub fn parse_with_vars(text: &str, names: &[&str], p: u64) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        parse::parse_poly(text, &names, &names, p)
    }

    pub(crate) fn add_term(&mut self, exps: ExpVector, coeff: BigRational) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                got: exps.len(),
            });
        }
        if let Some(e) = exps.iter().find(|e| e.prime() != self.prime) {
            return Err(Error::PrimeMismatch(self.prime, e.prime()));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[PAdicFrac]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        let zero: ExpVector = (0..self.nvars)
            .map(|_| PAdicFrac::int_unchecked(0, self.prime))
            .collect();
        self.coeff(&zero)
    }

    /// Largest denominator exponent over all terms.
    pub fn max_pexp(&self) -> u32 {
        self.terms
            .keys()
            .flatten()
            .map(|e| e.pexp())
            .max()
            .unwrap_or(0)
    }

    /// Common degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<PAdicFrac> {
        let mut degs = self.terms.keys().map(|v| {
            v.iter()
                .fold(PAdicFrac::int_unchecked(0, self.prime), |acc, e| &acc + e)
        });
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, rhs: &FracPoly) -> Result<FracPoly> {
        self.compatible(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> FracPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, rhs: &FracPoly) -> Result<FracPoly> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &FracPoly) -> Result<FracPoly> {
        self.compatible(rhs)?;
        let mut out = Self::zero(self.nvars, self.prime)?;
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb)?;
            }
        }
        Ok(out)
    }

    fn compatible(&self, rhs: &FracPoly) -> Result<()> {
        if self.prime != rhs.prime {
            return Err(Error::PrimeMismatch(self.prime, rhs.prime));
        }
        if self.nvars != rhs.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                got: rhs.nvars,
            });
        }
        Ok(())
    }

    /// Substitutes `X_j = U_j^{p^i}` for every variable, giving an
    /// integer-exponent polynomial.
    pub fn rescale_to_grade(&self, grade: u32) -> Result<IntPoly> {
        let mut out = IntPoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            let mut ie = Vec::with_capacity(self.nvars);
            for e in exps {
                let scaled = e
                    .scaled_to_grade(grade)
                    .ok_or_else(|| Error::GradeTooSmall {
                        degree: e.to_string(),
                        grade,
                    })?;
                if scaled.is_negative() {
                    return Err(Error::NegativeExponent);
                }
                ie.push(scaled.to_u32().ok_or(Error::Overflow)?);
            }
            out.add_term(ie, c.clone());
        }
        Ok(out)
    }

    /// `F(X^{p^k})`: every exponent multiplied by `p^k`.
    pub fn scale_exponents(&self, k: u32) -> FracPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|x| x.mul_prime_power(k)).collect(), c.clone()))
            .collect();
        FracPoly {
            nvars: self.nvars,
            prime: self.prime,
            terms,
        }
    }

    /// Replaces `x_var` by a monomial. The replacement is given as a
    /// polynomial so that non-monomial input can be rejected.
    pub fn substitute(&self, var: usize, replacement: &FracPoly) -> Result<FracPoly> {
        self.compatible(replacement)?;
        if var >= self.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                got: var + 1,
            });
        }
        let image = replacement.as_unit_monomial()?;
        let mut images: Vec<FracMonomial> = (0..self.nvars)
            .map(|j| FracMonomial::variable(j, self.nvars, self.prime))
            .collect();
        images[var] = image;
        self.substitute_all(&images)
    }

    /// Simultaneous monomial substitution `x_j -> images[j]`.
    pub fn substitute_all(&self, images: &[FracMonomial]) -> Result<FracPoly> {
        if images.len() != self.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                got: images.len(),
            });
        }
        for m in images {
            if m.exps.len() != self.nvars {
                return Err(Error::Arity {
                    expected: self.nvars,
                    got: m.exps.len(),
                });
            }
        }
        let mut out = Self::zero(self.nvars, self.prime)?;
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut acc: ExpVector = (0..self.nvars)
                .map(|_| PAdicFrac::int_unchecked(0, self.prime))
                .collect();
            for (e, img) in exps.iter().zip(images) {
                if e.is_zero() {
                    continue;
                }
                let powered = img.pow(e)?;
                coeff *= powered.coeff;
                for (a, b) in acc.iter_mut().zip(&powered.exps) {
                    *a = a.checked_add(b)?;
                }
            }
            out.add_term(acc, coeff)?;
        }
        Ok(out)
    }

    fn as_unit_monomial(&self) -> Result<FracMonomial> {
        if self.terms.len() != 1 {
            return Err(Error::NonMonomial);
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        if c.abs() != BigRational::one() {
            return Err(Error::NonMonomial);
        }
        Ok(FracMonomial {
            coeff: c.clone(),
            exps: e.clone(),
        })
    }

    /// Pulls out the largest power `x_var^e` dividing every term.
    pub fn extract_power(&self, var: usize) -> Result<(PAdicFrac, FracPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if var >= self.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                got: var + 1,
            });
        }
        let e = self
            .terms
            .keys()
            .map(|v| v[var].clone())
            .min()
            .expect("nonempty");
        let terms = self
            .terms
            .iter()
            .map(|(v, c)| {
                let mut v = v.clone();
                v[var] = &v[var] - &e;
                (v, c.clone())
            })
            .collect();
        Ok((
            e,
            FracPoly {
                nvars: self.nvars,
                prime: self.prime,
                terms,
            },
        ))
    }

    /// Sets `x_var = 0`: keeps only the terms free of `x_var`.
    pub fn restrict_zero(&self, var: usize) -> FracPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(v, _)| v[var].is_zero())
            .map(|(v, c)| (v.clone(), c.clone()))
            .collect();
        FracPoly {
            nvars: self.nvars,
            prime: self.prime,
            terms,
        }
    }

    pub fn render_with(&self, names: &[&str]) -> String {
        render_terms(self.terms.iter().rev(), names)
    }
}

fn render_exp(name: &str, e: &PAdicFrac) -> String {
    if e.is_integer() {
        if e.num().is_one() {
            name.to_string()
        } else if e.is_negative() {
            format!("{name}^({e})")
        } else {
            format!("{name}^{e}")
        }
    } else {
        format!("{name}^({e})")
    }
}

/// Monomial part of a term, `None` for the constant monomial.
pub(crate) fn render_monomial(exps: &[PAdicFrac], names: &[&str]) -> Option<String> {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| !e.is_zero())
        .map(|(e, n)| render_exp(n, e))
        .collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

fn render_terms<'a>(
    terms: impl Iterator<Item = (&'a ExpVector, &'a BigRational)>,
    names: &[&str],
) -> String {
    let mut out = String::new();
    for (i, (exps, c)) in terms.enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        match render_monomial(exps, names) {
            None => out.push_str(&a.to_string()),
            Some(m) if a.is_one() => out.push_str(&m),
            Some(m) => {
                out.push_str(&a.to_string());
                out.push('*');
                out.push_str(&m);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.render_with(&refs))
    }
}

impl Serialize for FracPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
