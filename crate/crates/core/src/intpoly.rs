//! Ordinary polynomials (non-negative integer exponents, rational
//! coefficients). Every grade of a fractional computation lands here after
//! rescaling.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponents::PAdicFrac;
use crate::fracpoly::{default_names, FracMonomial, FracPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Reads the fractional grammar and requires integer, non-negative exponents.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        FracPoly::parse(text, nvars, 2)?.rescale_to_grade(0)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exps.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        self.add(&rhs.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> IntPoly {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by the monomial with the given exponents.
    pub fn shift(&self, exps: &[u32]) -> IntPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        IntPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Sets `x_var = 0`.
    pub fn restrict_zero(&self, var: usize) -> IntPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] == 0)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        IntPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Divides by `x_var` once; `None` if some term lacks it.
    pub fn div_var(&self, var: usize) -> Option<IntPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                return None;
            }
            let mut e = e.clone();
            e[var] -= 1;
            terms.insert(e, c.clone());
        }
        Some(IntPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Exponents multiplied by `factor`: `F(X^factor)`.
    pub fn inflate(&self, factor: u32) -> Result<IntPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut v = Vec::with_capacity(e.len());
            for a in e {
                v.push(a.checked_mul(factor).ok_or(Error::Overflow)?);
            }
            terms.insert(v, c.clone());
        }
        Ok(IntPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn to_frac(&self, p: u64) -> Result<FracPoly> {
        let monos = self.terms.iter().map(|(e, c)| FracMonomial {
            coeff: c.clone(),
            exps: e.iter().map(|&a| PAdicFrac::int_unchecked(a, p)).collect(),
        });
        FracPoly::from_monomials(self.nvars, p, monos)
    }

    /// Leading term under lex order with the last variable most significant.
    fn leading(&self) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (ld, lc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((lr, cr)) = rem.leading() {
            if lr.iter().zip(ld).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = lr.iter().zip(ld).map(|(a, b)| a - b).collect();
            let c = cr / lc;
            rem = rem.sub(&d.shift(&e).scale(&c));
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> IntPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&(BigRational::one() / c)),
            None => self.clone(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_frac(2) {
            Ok(p) => {
                let names = default_names(self.nvars);
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                f.write_str(&p.render_with(&refs))
            }
            Err(_) => f.write_str("?"),
        }
    }
}

// Dense univariate polynomials over Q, lowest coefficient first.
type UPoly = Vec<BigRational>;

fn utrim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    utrim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    utrim(out)
}

fn udivrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let b = utrim(b.clone());
    let mut r = utrim(a.clone());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r = utrim(r);
    }
    (utrim(q), r)
}

fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (utrim(a.clone()), utrim(b.clone()));
    while !b.is_empty() {
        let (_, r) = udivrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &l;
        }
    }
    a
}

// Bivariate polynomials viewed in Q[x][y]: index = power of y (variable 1),
// entry = coefficient polynomial in x (variable 0).
type YPoly = Vec<UPoly>;

fn to_ypoly(f: &IntPoly) -> YPoly {
    let dy = f.degree_in(1).unwrap_or(0) as usize;
    let mut out: YPoly = vec![Vec::new(); dy + 1];
    for (e, c) in &f.terms {
        let slot = &mut out[e[1] as usize];
        let i = e[0] as usize;
        if slot.len() <= i {
            slot.resize(i + 1, BigRational::zero());
        }
        slot[i] += c;
    }
    ytrim(out.into_iter().map(utrim).collect())
}

fn from_ypoly(g: &YPoly) -> IntPoly {
    let mut out = IntPoly::zero(2);
    for (j, cx) in g.iter().enumerate() {
        for (i, c) in cx.iter().enumerate() {
            out.add_term(vec![i as u32, j as u32], c.clone());
        }
    }
    out
}

fn ytrim(mut a: YPoly) -> YPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn ycontent(a: &YPoly) -> UPoly {
    a.iter().fold(Vec::new(), |g, c| ugcd(&g, c))
}

fn yprimitive(a: &YPoly) -> YPoly {
    let c = ycontent(a);
    if c.is_empty() {
        return Vec::new();
    }
    ytrim(a.iter().map(|x| udivrem(x, &c).0).collect())
}

/// Pseudo-remainder of `a` by `b` in `Q[x][y]`.
fn yprem(a: &YPoly, b: &YPoly) -> YPoly {
    let mut r = ytrim(a.clone());
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().expect("nonempty").clone();
        let mut next: YPoly = r.iter().map(|c| umul(c, &lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = usub(&next[i + shift], &umul(bc, &lr));
        }
        r = ytrim(next);
        r = yprimitive_keep(&r);
    }
    r
}

// Divides out the content while keeping the zero polynomial as is.
fn yprimitive_keep(a: &YPoly) -> YPoly {
    if a.is_empty() {
        a.clone()
    } else {
        yprimitive(a)
    }
}

/// Greatest common divisor of two bivariate polynomials over Q, normalized to
/// a monic leading term. Returns the zero polynomial only when both are zero.
pub fn gcd2(f: &IntPoly, g: &IntPoly) -> IntPoly {
    assert!(f.nvars == 2 && g.nvars == 2, "gcd2 is bivariate");
    let (a, b) = (to_ypoly(f), to_ypoly(g));
    if a.is_empty() {
        return g.monic();
    }
    if b.is_empty() {
        return f.monic();
    }
    let content = ugcd(&ycontent(&a), &ycontent(&b));
    let (mut a, mut b) = (yprimitive(&a), yprimitive(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = yprem(&a, &b);
        a = b;
        b = r;
    }
    let prim = yprimitive(&a);
    let g: YPoly = prim.iter().map(|c| umul(c, &content)).collect();
    from_ypoly(&ytrim(g)).monic()
}

pub(crate) fn is_constant(f: &IntPoly) -> bool {
    f.terms.keys().all(|e| e.iter().all(|&a| a == 0))
}

pub(crate) fn lowest_pure_power(f: &IntPoly, var: usize) -> Option<u32> {
    // For a polynomial in one variable (others zero), the order of vanishing.
    f.terms
        .keys()
        .filter(|e| e.iter().enumerate().all(|(j, &a)| j == var || a == 0))
        .map(|e| e[var])
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str) -> IntPoly {
        IntPoly::parse(s, 2).unwrap()
    }

    #[test]
    fn arithmetic() {
        let f = ip("x + y");
        let g = ip("x - y");
        assert_eq!(f.mul(&g), ip("x^2 - y^2"));
        assert_eq!(f.add(&g), ip("2*x"));
        assert_eq!(f.sub(&f), IntPoly::zero(2));
        assert_eq!(ip("x^2*y + y").restrict_zero(0), ip("y"));
        assert_eq!(ip("x*y + x^3").div_var(0), Some(ip("y + x^2")));
        assert_eq!(ip("x*y + 1").div_var(0), None);
        assert_eq!(ip("y^2 - x^3").inflate(3).unwrap(), ip("y^6 - x^9"));
    }

    #[test]
    fn exact_division() {
        let f = ip("x + y").mul(&ip("y^2 - x^3 + 2"));
        assert_eq!(f.div_exact(&ip("x + y")), Some(ip("y^2 - x^3 + 2")));
        assert_eq!(ip("x^2 + 1").div_exact(&ip("x + 1")), None);
    }

    #[test]
    fn gcd_examples() {
        let c = ip("y - x^2");
        let f = c.mul(&ip("y + 1"));
        let g = c.mul(&ip("x - 3*y"));
        assert_eq!(gcd2(&f, &g), c.monic());
        assert!(is_constant(&gcd2(&ip("x"), &ip("y"))));
        assert_eq!(gcd2(&ip("x*y"), &ip("x")), ip("x"));
        assert_eq!(gcd2(&ip("x^2*y + x^2"), &ip("x^3")), ip("x^2"));
        assert_eq!(gcd2(&IntPoly::zero(2), &ip("2*y")), ip("y"));
        let h = ip("x^2 + x*y + 1");
        assert_eq!(gcd2(&h.mul(&ip("x")), &h.mul(&ip("y - 1"))), h.monic());
    }
}
