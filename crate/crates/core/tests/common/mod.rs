#![allow(dead_code)]

use num_bigint::BigInt;
use perfdim::PAdicFrac;

pub fn q(a: i64, b: i64, p: u64) -> PAdicFrac {
    PAdicFrac::new(a, b, p).unwrap()
}

/// Plane curves through the origin with integer exponents.
pub const CURVES: [&str; 20] = [
    "x",
    "y",
    "x + y",
    "y - x^2",
    "y + x^2",
    "y - x^3",
    "y^2 - x^3",
    "y^2 - x^3 - x^2",
    "y^2 - x^5",
    "x^2 - y^3",
    "x*y",
    "x^2 + y^2",
    "y^2 - x^2",
    "x^2",
    "y^3",
    "y - x - x^2",
    "x^3 + y^3 - x*y",
    "y^2 - x^4 - x^5",
    "y^2 + x^3*y - x^2*y - x^5",
    "2*x + 3*y - x*y^2",
];

/// Polynomials for the parser round trip as `(text, nvars, p)`.
pub const POLYS: [(&str, usize, u64); 50] = [
    ("y^(1/4) - x^(1/4) + x^(1/2)", 2, 2),
    ("y - x^(3/2)", 2, 2),
    ("y^(2/3) - x", 2, 3),
    ("y^2 - x^3", 2, 2),
    ("y^2 - x^3", 2, 3),
    ("y^2 - x^3 - x^2", 2, 2),
    ("x", 2, 2),
    ("y", 2, 3),
    ("x*y", 2, 5),
    ("y - x^2", 2, 3),
    ("y + x^2", 2, 3),
    ("x^2", 2, 2),
    ("y^3", 2, 2),
    ("x^(1/3)*y^(5/3)", 2, 3),
    ("x^2 + x^(5/3)*y^(1/3) + x^(4/3)*y^(2/3) + x*y", 2, 3),
    ("x^(2/3)*y^(4/3) + x^(1/3)*y^(5/3) + y^2", 2, 3),
    ("x^(1/2) - y^(1/2)", 2, 2),
    ("x^(1/4) + y^(1/4) - 1", 2, 2),
    ("x^(1/2)*y^(1/4) - y^(1/4) + 1", 2, 2),
    ("1 - y^(1/2)*x^(3/2)", 2, 2),
    ("x^(-1)*y", 2, 3),
    ("x^(-1/2)*y^(-1/2)*z^(-2)", 3, 2),
    ("x^(-1)*y^(-1)*z^(-1)", 3, 2),
    ("x0^(1/2)*x1^(1/2)", 3, 2),
    ("x*y*z", 3, 5),
    ("x^2 + y^2 + z^2", 3, 7),
    ("3/2*x - 7*y", 2, 2),
    ("-x", 2, 2),
    ("-3/2 + x^(-1)*y", 2, 3),
    ("0", 2, 2),
    ("5", 2, 3),
    ("x^(1/9)", 2, 3),
    ("x^(1/25) + y^(2/5)", 2, 5),
    ("x^(7/8) - y^(1/8)", 2, 2),
    ("x^(3/4) + x^(1/4)*y^(1/2)", 2, 2),
    ("y^(1/3) - x^(1/3) + x^(2/3)", 2, 3),
    ("x^(1/2)*y", 2, 2),
    ("x^2*y^3 - x^3*y^2", 2, 2),
    ("x^3 + y^3 - x*y", 2, 3),
    ("y^2 - x^4 - x^5", 2, 2),
    ("2*x + 3*y - x*y^2", 2, 5),
    ("x^5 - y^5", 2, 5),
    ("x0 + x1 + x2 + x3", 4, 2),
    ("x0^(1/2)*x3^(3/2)", 4, 2),
    ("x^(1/2)", 1, 2),
    ("x^(5/4) + x^(3/4)", 1, 2),
    ("x^(-1/3)", 1, 3),
    ("11/3*x^(2/7)", 2, 7),
    ("x^(1/2)*y^(1/2) - x*y + x^2*y^2", 2, 2),
    ("y^(3/2) - x^(1/2)*y", 2, 2),
];

/// Number of vectors of `parts` non-negative integers summing to `total`,
/// counted one by one.
pub fn count_by_listing(total: i64, parts: usize) -> u64 {
    fn go(remaining: i64, parts: usize) -> u64 {
        if parts == 1 {
            return u64::from(remaining >= 0);
        }
        (0..=remaining).map(|a| go(remaining - a, parts - 1)).sum()
    }
    if total < 0 {
        0
    } else {
        go(total, parts)
    }
}

/// Number of vectors of `parts` negative integers summing to `-total`.
pub fn count_negative_by_listing(total: i64, parts: usize) -> u64 {
    fn go(remaining: i64, parts: usize) -> u64 {
        if parts == 1 {
            return u64::from(remaining >= 1);
        }
        (1..remaining).map(|a| go(remaining - a, parts - 1)).sum()
    }
    go(total, parts)
}

pub fn big(v: u64) -> BigInt {
    BigInt::from(v)
}
