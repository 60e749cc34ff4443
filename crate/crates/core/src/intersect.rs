//! Intersection multiplicity of two plane curves at the origin, and its
//! graded version for curves with fractional exponents.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::braided::{BraidedDim, ExtInt, Generator};
use crate::error::{Error, Result};
use crate::exponents::prime_power;
use crate::fracpoly::FracPoly;
use crate::intpoly::{gcd2, is_constant, lowest_pure_power, IntPoly};
use crate::linalg::Echelon;

pub const DEFAULT_FUEL: usize = 100_000;

fn check_plane(f: &IntPoly) -> Result<()> {
    if f.nvars() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// `dim O/(F, G)` at the origin, `+inf` when `F` and `G` share a component
/// through it.
pub fn local_multiplicity(f: &IntPoly, g: &IntPoly) -> Result<ExtInt> {
    local_multiplicity_with_fuel(f, g, DEFAULT_FUEL)
}

pub fn local_multiplicity_with_fuel(f: &IntPoly, g: &IntPoly, fuel: usize) -> Result<ExtInt> {
    check_plane(f)?;
    check_plane(g)?;
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Ok(ExtInt::zero());
    }
    let common = gcd2(f, g);
    let (mut f, mut g) = if is_constant(&common) {
        (f.clone(), g.clone())
    } else if common.constant_term().is_zero() {
        return Ok(ExtInt::PosInf);
    } else {
        // a unit at the origin does not change the local ring
        let q = |h: &IntPoly| h.div_exact(&common).expect("gcd divides both");
        (q(f), q(g))
    };

    let mut acc = 0u64;
    for _ in 0..fuel {
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return Ok(ExtInt::finite(acc));
        }
        let r = f.restrict_zero(0);
        let s = g.restrict_zero(0);
        match (r.is_zero(), s.is_zero()) {
            (true, true) => return Ok(ExtInt::PosInf),
            (true, false) => {
                // F = x H and mu(x, G) = ord_y G(0, y)
                acc += lowest_pure_power(&g, 1).expect("G(0, y) is nonzero") as u64;
                f = f.div_var(0).expect("x divides F");
            }
            (false, true) => {
                acc += lowest_pure_power(&f, 1).expect("F(0, y) is nonzero") as u64;
                g = g.div_var(0).expect("x divides G");
            }
            (false, false) => {
                let mut dr = r.degree_in(1).unwrap_or(0);
                let mut ds = s.degree_in(1).unwrap_or(0);
                let (mut r, mut s) = (r, s);
                if dr > ds {
                    std::mem::swap(&mut f, &mut g);
                    std::mem::swap(&mut r, &mut s);
                    std::mem::swap(&mut dr, &mut ds);
                }
                let c = s.coeff(&[0, ds]) / r.coeff(&[0, dr]);
                g = g.sub(&f.shift(&[0, ds - dr]).scale(&c));
                if g.is_zero() {
                    return Ok(ExtInt::PosInf);
                }
            }
        }
    }
    Err(Error::FuelExhausted(fuel))
}

/// `dim k[x,y] / ((F, G) + m^N)` where `m = (x, y)`.
fn truncated_quotient_dim(f: &IntPoly, g: &IntPoly, n: u32) -> usize {
    let index = |a: u32, b: u32| -> usize {
        let d = (a + b) as usize;
        d * (d + 1) / 2 + b as usize
    };
    let monomials = (n as usize) * (n as usize + 1) / 2;
    let mut basis = Echelon::new();
    for h in [f, g] {
        for a in 0..n {
            for b in 0..n - a {
                let row: BTreeMap<usize, BigRational> = h
                    .terms()
                    .filter(|(e, _)| e[0] + a + e[1] + b < n)
                    .map(|(e, c)| (index(e[0] + a, e[1] + b), c.clone()))
                    .collect();
                basis.insert(row);
            }
        }
    }
    monomials - basis.rank()
}

/// Independent check of [`local_multiplicity`] by linear algebra on
/// truncated quotients. Once `dim_N == dim_{N+1}` the maximal ideal power
/// `m^N` lies in `(F, G)` locally and the dimension is final. Returns
/// [`Error::CapExceeded`] when no stable `N <= cap` is found, which covers
/// curves with a common component.
pub fn quotient_dim_oracle(f: &IntPoly, g: &IntPoly, cap: u32) -> Result<usize> {
    check_plane(f)?;
    check_plane(g)?;
    let mut n = 1;
    loop {
        let here = truncated_quotient_dim(f, g, n);
        if here == truncated_quotient_dim(f, g, n + 1) {
            return Ok(here);
        }
        if n >= cap {
            break;
        }
        n = (n * 2).min(cap);
    }
    Err(Error::CapExceeded(cap as usize))
}

/// Graded multiplicities of two curves with exponents in `Z[1/p]`.
///
/// Entry `(a, b)` is the multiplicity of `F(X^{p^a}, Y^{p^a})` against
/// `G(X^{p^b}, Y^{p^b})`, zero when either polynomial is not yet integral
/// at that grade. `mixed[i]` is the block `0 <= a, b <= i`. The diagonal
/// starts at the first grade where both are integral and stays constant.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityTuple {
    pub p: u64,
    pub diagonal: BraidedDim,
    pub mixed: Vec<Vec<Vec<ExtInt>>>,
}

impl MultiplicityTuple {
    /// Row-major flattening of `mixed[i]`.
    pub fn flat_row(&self, i: usize) -> Vec<ExtInt> {
        self.mixed[i].iter().flatten().cloned().collect()
    }
}

pub fn braided_multiplicity(
    f: &FracPoly,
    g: &FracPoly,
    grades: usize,
) -> Result<MultiplicityTuple> {
    for h in [f, g] {
        if h.nvars() != 2 {
            return Err(Error::Arity {
                expected: 2,
                got: h.nvars(),
            });
        }
        if h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    if f.prime() != g.prime() {
        return Err(Error::PrimeMismatch(f.prime(), g.prime()));
    }
    let p = f.prime();
    let (kf, kg) = (f.max_pexp(), g.max_pexp());
    let native = kf.max(kg);

    let mut cache: HashMap<(u32, u32), ExtInt> = HashMap::new();
    let mut entry = |a: u32, b: u32| -> Result<ExtInt> {
        if a < kf || b < kg {
            return Ok(ExtInt::zero());
        }
        // scaling both coordinates by p^m multiplies the multiplicity by p^{2m}
        let m = (a - kf).min(b - kg);
        let key = (a - m, b - m);
        let base = match cache.get(&key) {
            Some(v) => v.clone(),
            None => {
                let v =
                    local_multiplicity(&f.rescale_to_grade(key.0)?, &g.rescale_to_grade(key.1)?)?;
                cache.insert(key, v.clone());
                v
            }
        };
        if base.is_zero() {
            return Ok(base);
        }
        base.mul(&ExtInt::Finite(prime_power(p, 2 * m)))
    };

    let size = grades;
    let mut full = vec![vec![ExtInt::zero(); size]; size];
    for (a, row) in full.iter_mut().enumerate() {
        for (b, v) in row.iter_mut().enumerate() {
            *v = entry(a as u32, b as u32)?;
        }
    }
    let mixed = (0..size)
        .map(|i| full[..=i].iter().map(|row| row[..=i].to_vec()).collect())
        .collect();

    let value = entry(native, native)?;
    let diagonal = match &value {
        ExtInt::Finite(v) => {
            BraidedDim::from_generator(p, native, Generator::Const(v.clone()), grades)?
        }
        ExtInt::PosInf => BraidedDim::from_values(p, native, vec![ExtInt::PosInf; grades]),
    };
    Ok(MultiplicityTuple { p, diagonal, mixed })
}
