// Recursive-descent reader for the polynomial grammar:
//
//   poly  := sign? term (("+" | "-") term)*
//   term  := coeff ("*"? monom)* | monom ("*"? monom)*
//   monom := var ("^" exp)?
//   exp   := int | "(" int ("/" int)? ")"        int may carry a leading "-"
//   coeff := int | int "/" int

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExpVector, FracPoly};
use crate::error::{Error, ParseError, Result};
use crate::exponents::{power_of_prime, PAdicFrac};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    aliases: &'a [String],
    prime: u64,
}

pub(super) fn parse_poly(
    text: &str,
    names: &[String],
    aliases: &[String],
    p: u64,
) -> Result<FracPoly> {
    let mut poly = FracPoly::zero(names.len(), p)?;
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        names,
        aliases,
        prime: p,
    };
    parser.skip_ws();
    let mut sign = BigRational::one();
    if parser.eat(b'-') {
        sign = -sign;
    } else {
        parser.eat(b'+');
    }
    loop {
        let (exps, coeff) = parser.term()?;
        poly.add_term(exps, coeff * &sign)?;
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some(b'+') => sign = BigRational::one(),
            Some(b'-') => sign = -BigRational::one(),
            Some(_) => return Err(parser.err("expected '+' or '-'")),
        }
        parser.pos += 1;
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse(ParseError::new(self.pos, msg))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let neg = self.src.get(self.pos) == Some(&b'-');
        let start = if neg { self.pos + 1 } else { self.pos };
        let mut end = start;
        while end < self.src.len() && self.src[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..end]).expect("ascii digits");
        let mut n: BigInt = digits.parse().expect("digits parse");
        if neg {
            n = -n;
        }
        self.pos = end;
        Ok(n)
    }

    fn zero_exps(&self) -> ExpVector {
        (0..self.names.len())
            .map(|_| PAdicFrac::int_unchecked(0, self.prime))
            .collect()
    }

    fn term(&mut self) -> Result<(ExpVector, BigRational)> {
        let mut exps = self.zero_exps();
        let mut coeff = BigRational::one();
        let mut have_factor = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat(b'/') {
                let at = self.pos;
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(Error::Parse(ParseError::new(at, "zero denominator")));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(num, den);
            have_factor = true;
        }
        loop {
            let star = have_factor && self.eat(b'*');
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let (var, e) = self.monom()?;
                    exps[var] = &exps[var] + &e;
                    have_factor = true;
                }
                _ if star => return Err(self.err("expected a variable after '*'")),
                _ => break,
            }
        }
        if !have_factor {
            return Err(self.err("expected a term"));
        }
        Ok((exps, coeff))
    }

    fn monom(&mut self) -> Result<(usize, PAdicFrac)> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let hit = self
            .names
            .iter()
            .chain(self.aliases)
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .max_by_key(|(_, n)| n.len());
        let (idx, len) = match hit {
            Some((i, n)) => (i % self.names.len(), n.len()),
            None => {
                let end = rest
                    .iter()
                    .position(|c| !c.is_ascii_alphanumeric())
                    .unwrap_or(rest.len());
                let word = String::from_utf8_lossy(&rest[..end]);
                return Err(self.err(format!("unknown variable {word:?}")));
            }
        };
        self.pos += len;
        if !self.eat(b'^') {
            return Ok((idx, PAdicFrac::int_unchecked(1, self.prime)));
        }
        let e = if self.eat(b'(') {
            let num = self.integer()?;
            let e = if self.eat(b'/') {
                let at = self.pos;
                let den = self.integer()?;
                let k = power_of_prime(&den, self.prime).ok_or_else(|| {
                    Error::Parse(ParseError::new(
                        at,
                        format!("denominator not a power of p: {den}"),
                    ))
                })?;
                PAdicFrac::normalized(num, k, self.prime)
            } else {
                PAdicFrac::int_unchecked(num, self.prime)
            };
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            e
        } else {
            PAdicFrac::int_unchecked(self.integer()?, self.prime)
        };
        Ok((idx, e))
    }
}
