//! Bezout identities, Veronese coordinates and blow-ups at the origin.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braided::{BraidedDim, ExtInt, Generator};
use crate::enumeration::{enumerate_h0_monomials, GradedPiece};
use crate::error::{Error, Result};
use crate::exponents::PAdicFrac;
use crate::fracpoly::{default_names, render_monomial, FracMonomial, FracPoly};

/// Dimension of degree-`e` forms on `P^2` at a grade, by listing them.
fn plane_forms(e: &PAdicFrac, grade: u32) -> Result<BigInt> {
    match enumerate_h0_monomials(2, e, grade) {
        Ok(piece) => Ok(BigInt::from(piece.len())),
        Err(Error::GradeTooSmall { .. }) => Ok(BigInt::zero()),
        Err(e) => Err(e),
    }
}

/// Length of the intersection of plane curves of degrees `deg_f`, `deg_g`
/// from the alternating sum `V(d-f-g) - V(d-f) - V(d-g) + V(d)` of graded
/// piece dimensions. Grade `j` gives `p^{2j} * deg_f * deg_g`.
pub fn bezout_chi(d: &PAdicFrac, deg_f: u64, deg_g: u64, grades: usize) -> Result<BraidedDim> {
    let p = d.prime();
    let shift = |k: u64| d - &PAdicFrac::int_unchecked(k, p);
    let min = deg_f + deg_g;
    if d < &PAdicFrac::int_unchecked(min, p) {
        return Err(Error::BezoutDegreeTooSmall {
            d: d.to_string(),
            min,
        });
    }
    let degrees = [shift(deg_f + deg_g), shift(deg_f), shift(deg_g), d.clone()];
    let offset = d.pexp();
    let mut values = Vec::with_capacity(grades);
    for j in 0..grades as u32 {
        let v: Vec<BigInt> = degrees
            .iter()
            .map(|e| plane_forms(e, offset + j))
            .collect::<Result<_>>()?;
        values.push(ExtInt::Finite(&v[0] - &v[1] - &v[2] + &v[3]));
    }
    let leaf = |e: &PAdicFrac| {
        Box::new(Generator::H0 {
            n: 2,
            degree: e.clone(),
        })
    };
    let generator = Generator::Sum(
        Box::new(Generator::Diff(
            Box::new(Generator::Diff(leaf(&degrees[0]), leaf(&degrees[1]))),
            leaf(&degrees[2]),
        )),
        leaf(&degrees[3]),
    );
    Ok(BraidedDim::from_parts(p, offset, values, generator))
}

/// `h^1 O(-(s+t)/p^k) - h^1 O(-s/p^k) - h^1 O(-t/p^k)` on `P^1`, reported
/// from grade `k` on.
pub fn bezout_line(s: u64, t: u64, k: u32, grades: usize, p: u64) -> Result<BraidedDim> {
    if s == 0 || t == 0 {
        return Err(Error::DegreeOutOfRange(
            format!("{s}, {t}"),
            "s and t must be positive",
        ));
    }
    crate::exponents::check_prime(p)?;
    let m = |a: u64| PAdicFrac::normalized(BigInt::from(a), k, p);
    let leaf = |a: u64| Box::new(Generator::Hn { n: 1, m: m(a) });
    let generator = Generator::Diff(Box::new(Generator::Diff(leaf(s + t), leaf(s))), leaf(t));
    BraidedDim::from_generator(p, k, generator, grades)
}

/// Coordinates of the degree-`d` Veronese map of `P^n` at one grade.
#[derive(Clone, Debug)]
pub struct VeroneseMap {
    pub n: usize,
    pub d: u64,
    pub grade: u32,
    pub p: u64,
    pub monomials: GradedPiece,
    pub target_dim: usize,
}

impl VeroneseMap {
    pub fn coordinates(&self) -> Vec<String> {
        let names = default_names(self.n + 1);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.monomials
            .monomials()
            .iter()
            .map(|v| render_monomial(v, &refs).unwrap_or_else(|| "1".to_string()))
            .collect()
    }

    /// Every coordinate of `self` is also a coordinate of `other`.
    pub fn included_in(&self, other: &VeroneseMap) -> bool {
        self.monomials
            .monomials()
            .iter()
            .all(|v| other.monomials.contains(v))
    }
}

impl fmt::Display for VeroneseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coordinates().join(":"))
    }
}

impl Serialize for VeroneseMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VeroneseMap", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("grade", &self.grade)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("target_dim", &self.target_dim)?;
        st.serialize_field("coordinates", &self.coordinates())?;
        st.end()
    }
}

pub const MAX_VERONESE_DIM: usize = 3;

pub fn veronese(n: usize, d: u64, grade: u32, p: u64) -> Result<VeroneseMap> {
    if n > MAX_VERONESE_DIM {
        return Err(Error::DimensionCap(n, MAX_VERONESE_DIM));
    }
    let degree = PAdicFrac::from_int(d, p)?;
    let monomials = enumerate_h0_monomials(n, &degree, grade)?;
    let target_dim = monomials.len() - 1;
    Ok(VeroneseMap {
        n,
        d,
        grade,
        p,
        monomials,
        target_dim,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// `y = x v`, the chart where `u = 1`.
    U,
    /// `x = y u`, the chart where `v = 1`.
    V,
}

impl Chart {
    fn names(self) -> [&'static str; 2] {
        match self {
            Chart::U => ["x", "v"],
            Chart::V => ["u", "y"],
        }
    }

    /// Slot of the coordinate that is set to zero over the origin.
    fn blown_down(self) -> usize {
        match self {
            Chart::U => 0,
            Chart::V => 1,
        }
    }

    fn point(self) -> &'static str {
        match self {
            Chart::U => "(1:0)",
            Chart::V => "(0:1)",
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::U => "u",
            Chart::V => "v",
        })
    }
}

/// What lies over the origin in one chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exceptional {
    /// No solutions; the witness equation cannot hold as the blown-down
    /// coordinate tends to zero.
    Empty { witness: String },
    /// A single point of the exceptional line.
    Point { point: String, constraint: String },
    /// Points `(1:a)` or `(a:1)` with `a` solving the constraint.
    Constraint { constraint: String },
}

#[derive(Clone, Debug)]
pub struct BlowupChart {
    pub chart: Chart,
    /// Power of the blown-down coordinate removed from the total transform.
    pub power: PAdicFrac,
    pub transformed: FracPoly,
    pub exceptional: Exceptional,
}

impl BlowupChart {
    pub fn substitution(&self) -> &'static str {
        match self.chart {
            Chart::U => "y = x*v",
            Chart::V => "x = y*u",
        }
    }

    pub fn transformed_text(&self) -> String {
        self.transformed.render_with(&self.chart.names())
    }
}

impl Serialize for Exceptional {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Exceptional", 3)?;
        match self {
            Exceptional::Empty { witness } => {
                st.serialize_field("kind", "empty")?;
                st.serialize_field("witness", witness)?;
            }
            Exceptional::Point { point, constraint } => {
                st.serialize_field("kind", "point")?;
                st.serialize_field("point", point)?;
                st.serialize_field("constraint", constraint)?;
            }
            Exceptional::Constraint { constraint } => {
                st.serialize_field("kind", "constraint")?;
                st.serialize_field("constraint", constraint)?;
            }
        }
        st.end()
    }
}

impl Serialize for BlowupChart {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BlowupChart", 5)?;
        st.serialize_field("chart", &self.chart.to_string())?;
        st.serialize_field("substitution", self.substitution())?;
        st.serialize_field("power", &self.power)?;
        st.serialize_field("transformed", &self.transformed_text())?;
        st.serialize_field("exceptional", &self.exceptional)?;
        st.end()
    }
}

/// `lhs = rhs` with the leading coefficient on the left made positive.
fn equation(lhs: &FracPoly, rhs: &FracPoly, names: &[&str]) -> String {
    let flip = lhs
        .terms()
        .next_back()
        .is_some_and(|(_, c)| c.is_negative());
    let (l, r) = if flip {
        (lhs.neg(), rhs.neg())
    } else {
        (lhs.clone(), rhs.clone())
    };
    format!("{} = {}", l.render_with(names), r.render_with(names))
}

fn chart(f: &FracPoly, chart: Chart) -> Result<BlowupChart> {
    let p = f.prime();
    let mut images: Vec<FracMonomial> = (0..2).map(|j| FracMonomial::variable(j, 2, p)).collect();
    let down = chart.blown_down();
    let other = 1 - down;
    // the other slot now holds the chart coordinate: other -> down * other
    images[other] = FracMonomial::from_exps(vec![
        PAdicFrac::int_unchecked(1, p),
        PAdicFrac::int_unchecked(1, p),
    ]);
    let total = f.substitute_all(&images)?;
    let (power, transformed) = total.extract_power(down)?;
    let names = chart.names();
    let restricted = transformed.restrict_zero(down);
    let zero = FracPoly::zero(2, p)?;

    let constant = restricted.constant_term();
    let mut rest = restricted.clone();
    if !constant.is_zero() {
        rest = rest.sub(&constant_poly(&constant, p)?)?;
    }
    let exceptional = if rest.is_zero() {
        let c = transformed.constant_term();
        let others = transformed.sub(&constant_poly(&c, p)?)?;
        Exceptional::Empty {
            witness: equation(&constant_poly(&c, p)?, &others.neg(), &names),
        }
    } else if constant.is_zero() && rest.num_terms() == 1 {
        let var = FracPoly::from_monomials(2, p, [FracMonomial::variable(other, 2, p)])?;
        Exceptional::Point {
            point: chart.point().to_string(),
            constraint: equation(&var, &zero, &names),
        }
    } else if constant.is_zero() {
        Exceptional::Constraint {
            constraint: equation(&rest, &zero, &names),
        }
    } else {
        Exceptional::Constraint {
            constraint: equation(&rest, &constant_poly(&-constant, p)?, &names),
        }
    };
    Ok(BlowupChart {
        chart,
        power,
        transformed,
        exceptional,
    })
}

fn constant_poly(c: &BigRational, p: u64) -> Result<FracPoly> {
    let mono = FracMonomial {
        coeff: c.clone(),
        exps: vec![
            PAdicFrac::int_unchecked(0, p),
            PAdicFrac::int_unchecked(0, p),
        ],
    };
    FracPoly::from_monomials(2, p, [mono])
}

/// Both affine charts of the blow-up of the plane at the origin, applied to
/// the curve `F = 0`.
pub fn blowup_origin(f: &FracPoly) -> Result<(BlowupChart, BlowupChart)> {
    if f.nvars() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::OriginNotOnCurve);
    }
    Ok((chart(f, Chart::U)?, chart(f, Chart::V)?))
}

/// Coordinate maps of the two standard charts of the blown-up plane and
/// their identification on the overlap. All maps are simultaneous monomial
/// substitutions in two variables.
#[derive(Clone, Debug)]
pub struct PlaneCharts {
    pub p: u64,
    /// `X -> X1, Y -> X1 Y1`.
    pub chart1: Vec<FracMonomial>,
    /// `X -> X2 Y2, Y -> Y2`.
    pub chart2: Vec<FracMonomial>,
    /// Chart-1 coordinates in chart-2 terms: `X1 -> X2 Y2, Y1 -> X2^-1`.
    pub gluing: Vec<FracMonomial>,
    /// `X2 -> Y1^-1, Y2 -> X1 Y1`.
    pub inverse: Vec<FracMonomial>,
}

fn mono(a: i64, b: i64, p: u64) -> FracMonomial {
    FracMonomial::from_exps(vec![
        PAdicFrac::int_unchecked(a, p),
        PAdicFrac::int_unchecked(b, p),
    ])
}

pub fn blowup_plane_charts(p: u64) -> Result<PlaneCharts> {
    crate::exponents::check_prime(p)?;
    Ok(PlaneCharts {
        p,
        chart1: vec![mono(1, 0, p), mono(1, 1, p)],
        chart2: vec![mono(1, 1, p), mono(0, 1, p)],
        gluing: vec![mono(1, 1, p), mono(-1, 0, p)],
        inverse: vec![mono(0, -1, p), mono(1, 1, p)],
    })
}

impl PlaneCharts {
    pub fn pullback1(&self, f: &FracPoly) -> Result<FracPoly> {
        f.substitute_all(&self.chart1)
    }

    pub fn pullback2(&self, f: &FracPoly) -> Result<FracPoly> {
        f.substitute_all(&self.chart2)
    }

    pub fn glue(&self, f: &FracPoly) -> Result<FracPoly> {
        f.substitute_all(&self.gluing)
    }

    pub fn unglue(&self, f: &FracPoly) -> Result<FracPoly> {
        f.substitute_all(&self.inverse)
    }

    /// Checks on every monomial `X^a Y^b` with `|a|, |b| <= bound` that the
    /// gluing and its inverse compose to the identity in both orders, and
    /// that chart 1 followed by the gluing is chart 2.
    pub fn self_check(&self, bound: i64) -> Result<bool> {
        for a in -bound..=bound {
            for b in -bound..=bound {
                let m = FracPoly::from_monomials(2, self.p, [mono(a, b, self.p)])?;
                if self.unglue(&self.glue(&m)?)? != m || self.glue(&self.unglue(&m)?)? != m {
                    return Ok(false);
                }
                if self.glue(&self.pullback1(&m)?)? != self.pullback2(&m)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn describe(&self) -> Vec<String> {
        let rule = |from: [&str; 2], images: &[FracMonomial], to: [&str; 2]| -> Vec<String> {
            from.iter()
                .zip(images)
                .map(|(v, m)| {
                    let img = render_monomial(&m.exps, &to).unwrap_or_else(|| "1".into());
                    format!("{v} -> {img}")
                })
                .collect()
        };
        let mut out = rule(["X", "Y"], &self.chart1, ["X1", "Y1"]);
        out.extend(rule(["X", "Y"], &self.chart2, ["X2", "Y2"]));
        out.extend(rule(["X1", "Y1"], &self.gluing, ["X2", "Y2"]));
        out.extend(rule(["X2", "Y2"], &self.inverse, ["X1", "Y1"]));
        out
    }
}
