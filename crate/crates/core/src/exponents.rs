//! Exact arithmetic on `Z[1/p]`, the ring of rationals whose denominators are
//! powers of a fixed prime. Every exponent and every degree in the crate is one
//! of these.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `p^e` as a big integer.
pub fn prime_power(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

/// An element `num / p^pexp` of `Z[1/p]`, always stored in lowest terms.
///
/// Zero is `(0, 0)`; for `pexp > 0` the numerator is not divisible by `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PAdicFrac {
    num: BigInt,
    pexp: u32,
    prime: u64,
}

impl PAdicFrac {
    /// Canonical form of `a / p^b`.
    pub fn new(a: impl Into<BigInt>, b: i64, p: u64) -> Result<Self> {
        check_prime(p)?;
        if b < 0 {
            return Err(Error::NegativeDenominatorExponent(b));
        }
        let b = u32::try_from(b).map_err(|_| Error::Overflow)?;
        Ok(Self::normalized(a.into(), b, p))
    }

    /// Caller guarantees `p` is prime.
    pub(crate) fn normalized(mut num: BigInt, mut pexp: u32, prime: u64) -> Self {
        if num.is_zero() {
            return PAdicFrac {
                num,
                pexp: 0,
                prime,
            };
        }
        let bp = BigInt::from(prime);
        while pexp > 0 {
            let (q, r) = num.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            num = q;
            pexp -= 1;
        }
        PAdicFrac { num, pexp, prime }
    }

    pub fn from_int(a: impl Into<BigInt>, p: u64) -> Result<Self> {
        Self::new(a, 0, p)
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(0, 0, p)
    }

    pub(crate) fn int_unchecked(a: impl Into<BigInt>, p: u64) -> Self {
        PAdicFrac {
            num: a.into(),
            pexp: 0,
            prime: p,
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn pexp(&self) -> u32 {
        self.pexp
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// The tuple `(a, b)` for `a / p^b`; terms are ordered by comparing these
    /// tuples as the rationals they denote.
    pub fn order_key(&self) -> (BigInt, u32) {
        (self.num.clone(), self.pexp)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.pexp == 0
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), prime_power(self.prime, self.pexp))
    }

    /// `p^i * self` when that is an integer.
    pub fn scaled_to_grade(&self, grade: u32) -> Option<BigInt> {
        if grade < self.pexp {
            return None;
        }
        Some(&self.num * prime_power(self.prime, grade - self.pexp))
    }

    /// `p^k * self`.
    pub fn mul_prime_power(&self, k: u32) -> Self {
        if k <= self.pexp {
            Self::normalized(self.num.clone(), self.pexp - k, self.prime)
        } else {
            Self::normalized(
                &self.num * prime_power(self.prime, k - self.pexp),
                0,
                self.prime,
            )
        }
    }

    /// `self / p^k`.
    pub fn div_prime_power(&self, k: u32) -> Self {
        Self::normalized(self.num.clone(), self.pexp + k, self.prime)
    }

    fn same_prime(&self, rhs: &Self) -> Result<()> {
        if self.prime == rhs.prime {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.prime, rhs.prime))
        }
    }

    /// Numerators brought over the common denominator `p^max(pexp)`.
    fn aligned(&self, rhs: &Self) -> (BigInt, BigInt, u32) {
        let e = self.pexp.max(rhs.pexp);
        let a = &self.num * prime_power(self.prime, e - self.pexp);
        let b = &rhs.num * prime_power(self.prime, e - rhs.pexp);
        (a, b, e)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_prime(rhs)?;
        let (a, b, e) = self.aligned(rhs);
        Ok(Self::normalized(a + b, e, self.prime))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_prime(rhs)?;
        let (a, b, e) = self.aligned(rhs);
        Ok(Self::normalized(a - b, e, self.prime))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_prime(rhs)?;
        Ok(Self::normalized(
            &self.num * &rhs.num,
            self.pexp + rhs.pexp,
            self.prime,
        ))
    }

    pub fn checked_cmp(&self, rhs: &Self) -> Result<Ordering> {
        self.same_prime(rhs)?;
        let (a, b, _) = self.aligned(rhs);
        Ok(a.cmp(&b))
    }

    /// Reads `a`, `a/b` (with `b` a power of `p`) or `a/p^b`.
    pub fn parse(text: &str, p: u64) -> Result<Self> {
        check_prime(p)?;
        let s = text.trim();
        let bad = |msg: &str| Error::Parse(ParseError::new(0, format!("{msg}: {s:?}")));
        let int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| bad("expected an integer"))
        };
        match s.split_once('/') {
            None => Self::from_int(int(s)?, p),
            Some((a, den)) => {
                let a = int(a)?;
                if let Some((base, e)) = den.split_once('^') {
                    let base = int(base)?;
                    if base != BigInt::from(p) {
                        return Err(bad("denominator base must be the configured prime"));
                    }
                    let e: i64 = e.trim().parse().map_err(|_| bad("expected an exponent"))?;
                    Self::new(a, e, p)
                } else {
                    let den = int(den)?;
                    let e = power_of_prime(&den, p)
                        .ok_or_else(|| bad("denominator not a power of p"))?;
                    Self::new(a, e as i64, p)
                }
            }
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.pexp == 0 {
            self.num.to_i64()
        } else {
            None
        }
    }
}

/// `Some(e)` when `den == p^e` for `e >= 0`.
pub fn power_of_prime(den: &BigInt, p: u64) -> Option<u32> {
    if !den.is_positive() {
        return None;
    }
    let bp = BigInt::from(p);
    let mut d = den.clone();
    let mut e = 0u32;
    while !d.is_one() {
        let (q, r) = d.div_rem(&bp);
        if !r.is_zero() {
            return None;
        }
        d = q;
        e += 1;
    }
    Some(e)
}

impl Ord for PAdicFrac {
    /// Rational order; values under different primes fall back to the prime.
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.pexp.max(other.pexp);
        let a = &self.num * prime_power(self.prime, e - self.pexp);
        let b = &other.num * prime_power(other.prime, e - other.pexp);
        if self.prime == other.prime {
            a.cmp(&b)
        } else {
            self.to_rational()
                .cmp(&other.to_rational())
                .then(self.prime.cmp(&other.prime))
        }
    }
}

impl PartialOrd for PAdicFrac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&PAdicFrac> for &PAdicFrac {
            type Output = PAdicFrac;
            /// Panics when the primes differ; use the `checked_*` form to recover.
            fn $method(self, rhs: &PAdicFrac) -> PAdicFrac {
                self.$checked(rhs).expect("mixed primes")
            }
        }
        impl $trait for PAdicFrac {
            type Output = PAdicFrac;
            fn $method(self, rhs: PAdicFrac) -> PAdicFrac {
                (&self).$method(&rhs)
            }
        }
    };
}

checked_op!(Add, add, checked_add);
checked_op!(Sub, sub, checked_sub);
checked_op!(Mul, mul, checked_mul);

impl Neg for &PAdicFrac {
    type Output = PAdicFrac;
    fn neg(self) -> PAdicFrac {
        PAdicFrac {
            num: -&self.num,
            pexp: self.pexp,
            prime: self.prime,
        }
    }
}

impl Neg for PAdicFrac {
    type Output = PAdicFrac;
    fn neg(self) -> PAdicFrac {
        -&self
    }
}

impl fmt::Display for PAdicFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pexp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, prime_power(self.prime, self.pexp))
        }
    }
}

impl Serialize for PAdicFrac {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, p: u64) -> PAdicFrac {
        PAdicFrac::new(a, b, p).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let x = q(6, 1, 3);
        assert_eq!((x.num().clone(), x.pexp()), (BigInt::from(2), 0));
        let z = q(0, 5, 2);
        assert_eq!((z.num().clone(), z.pexp()), (BigInt::from(0), 0));
        let one = q(9, 2, 3);
        assert_eq!((one.num().clone(), one.pexp()), (BigInt::from(1), 0));
        let keep = q(7, 2, 3);
        assert_eq!(keep.pexp(), 2);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(PAdicFrac::new(1, 0, 4), Err(Error::NotPrime(4)));
        assert_eq!(PAdicFrac::new(1, 0, 1), Err(Error::NotPrime(1)));
        assert_eq!(
            PAdicFrac::new(1, -1, 3),
            Err(Error::NegativeDenominatorExponent(-1))
        );
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q(1, 1, 3) + q(2, 1, 3), q(1, 0, 3));
        let s = q(2, 0, 2) + q(1, 2, 2);
        assert_eq!((s.num().clone(), s.pexp()), (BigInt::from(9), 2));
        assert_eq!(q(1, 2, 3).checked_cmp(&q(1, 1, 3)), Ok(Ordering::Less));
        assert_eq!(
            q(1, 1, 3).checked_add(&q(1, 1, 2)),
            Err(Error::PrimeMismatch(3, 2))
        );
        assert_eq!(q(1, 1, 3) * q(3, 0, 3), q(1, 0, 3));
        assert_eq!(-q(2, 1, 5), q(-2, 1, 5));
    }

    #[test]
    fn order_key_examples() {
        assert_eq!(q(5, 0, 7).order_key(), (BigInt::from(5), 0));
        assert_eq!(q(2, 2, 3).order_key(), (BigInt::from(2), 2));
        assert_eq!(q(0, 0, 3).order_key(), (BigInt::from(0), 0));
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(q(7, 2, 3).to_string(), "7/9");
        assert_eq!(q(-5, 0, 3).to_string(), "-5");
        assert_eq!(PAdicFrac::parse("2/3", 3).unwrap(), q(2, 1, 3));
        assert_eq!(PAdicFrac::parse("-5/3^1", 3).unwrap(), q(-5, 1, 3));
        assert_eq!(PAdicFrac::parse("-3/3", 3).unwrap(), q(-1, 0, 3));
        assert!(PAdicFrac::parse("1/6", 3).is_err());
        assert!(PAdicFrac::parse("1/2^1", 3).is_err());
    }

    #[test]
    fn grade_scaling() {
        let x = q(2, 1, 3);
        assert_eq!(x.scaled_to_grade(0), None);
        assert_eq!(x.scaled_to_grade(2), Some(BigInt::from(6)));
        assert_eq!(x.mul_prime_power(2), q(6, 0, 3));
        assert_eq!(x.div_prime_power(1), q(2, 2, 3));
    }

    fn arb(p: u64) -> impl Strategy<Value = PAdicFrac> {
        (-200i64..200, 0i64..4).prop_map(move |(a, b)| q(a, b, p))
    }

    proptest! {
        #[test]
        fn normalization_idempotent(a in -500i64..500, b in 0i64..5) {
            let x = q(a, b, 3);
            let y = PAdicFrac::new(x.num().clone(), x.pexp() as i64, 3).unwrap();
            prop_assert_eq!(&x, &y);
            if x.pexp() > 0 {
                prop_assert!(!(x.num() % BigInt::from(3)).is_zero());
            }
        }

        #[test]
        fn ring_laws(x in arb(2), y in arb(2), z in arb(2)) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!((&x + &(-&x)).is_zero());
            prop_assert_eq!(&x - &y, &x + &(-&y));
        }

        #[test]
        fn cmp_matches_cross_multiplication(x in arb(5), y in arb(5)) {
            let lhs = x.num() * prime_power(5, y.pexp());
            let rhs = y.num() * prime_power(5, x.pexp());
            prop_assert_eq!(x.checked_cmp(&y).unwrap(), lhs.cmp(&rhs));
            prop_assert_eq!(x.cmp(&y), x.to_rational().cmp(&y.to_rational()));
        }

        #[test]
        fn order_key_is_strict_on_distinct_values(x in arb(3), y in arb(3)) {
            let (a, b) = x.order_key();
            let (c, d) = y.order_key();
            let rx = BigRational::new(a, prime_power(3, b));
            let ry = BigRational::new(c, prime_power(3, d));
            prop_assert_eq!(x == y, rx == ry);
            prop_assert_eq!(x.cmp(&y), rx.cmp(&ry));
        }
    }
}
