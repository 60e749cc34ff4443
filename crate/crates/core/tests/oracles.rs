mod common;

use common::{big, count_by_listing, count_negative_by_listing, q, CURVES, POLYS};
use num_bigint::BigInt;
use perfdim::braided::{euler, h0, hn_top};
use perfdim::enumeration::{count_h0_monomials, enumerate_h0_monomials, enumerate_hn_monomials};
use perfdim::intersect::{local_multiplicity, quotient_dim_oracle};
use perfdim::{Error, ExtInt, FracPoly, IntPoly, LineBundle};
use proptest::prelude::*;

fn poly(s: &str) -> IntPoly {
    IntPoly::parse(s, 2).unwrap()
}

#[test]
fn listing_matches_closed_form_on_larger_pieces() {
    for (n, d, i, p) in [
        (2usize, 3i64, 2u32, 3u64),
        (3, 2, 2, 2),
        (1, 7, 3, 2),
        (4, 1, 1, 5),
    ] {
        let piece = enumerate_h0_monomials(n, &q(d, 0, p), i).unwrap();
        let want = count_by_listing(d * (p as i64).pow(i), n + 1);
        assert_eq!(piece.len() as u64, want);
        assert_eq!(count_h0_monomials(n, &q(d, 0, p), i).unwrap(), big(want));
        let neg = enumerate_hn_monomials(n, &q(d + n as i64 + 1, 0, p), i).unwrap();
        assert_eq!(
            neg.len() as u64,
            count_negative_by_listing((d + n as i64 + 1) * (p as i64).pow(i), n + 1)
        );
    }
}

#[test]
fn listed_monomials_are_distinct_and_have_the_right_degree() {
    let piece = enumerate_h0_monomials(2, &q(4, 1, 3), 2).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for v in piece.scaled() {
        assert_eq!(v.iter().sum::<i64>(), 12);
        assert!(v.iter().all(|&e| e >= 0));
        assert!(seen.insert(v.clone()));
    }
}

#[test]
fn fulton_agrees_with_quotient_dimension_on_corpus() {
    let mut finite = 0;
    for f in CURVES {
        for g in CURVES {
            let a = local_multiplicity(&poly(f), &poly(g)).unwrap();
            match (a, quotient_dim_oracle(&poly(f), &poly(g), 24)) {
                (ExtInt::Finite(a), Ok(b)) => {
                    assert_eq!(a, BigInt::from(b), "({f}, {g})");
                    finite += 1;
                }
                (ExtInt::PosInf, Err(Error::CapExceeded(_))) => {}
                (a, b) => panic!("({f}, {g}): {a} vs {b:?}"),
            }
        }
    }
    assert!(finite > 300);
}

#[test]
fn known_multiplicities() {
    for (f, g, want) in [
        ("y^2 - x^3", "x", 2),
        ("y^2 - x^3", "y", 3),
        ("y^2 - x^3", "x^2 - y^3", 4),
        ("y - x^2", "y + x^2", 2),
        ("x^3 + y^3 - x*y", "x", 3),
        ("y^2 - x^3 - x^2", "y^2 - x^2", 6),
    ] {
        assert_eq!(
            local_multiplicity(&poly(f), &poly(g)).unwrap(),
            ExtInt::finite(want),
            "({f}, {g})"
        );
    }
}

#[test]
fn euler_characteristic_is_alternating_sum() {
    for d in -6..=4i64 {
        let b = LineBundle::new(1, q(d, 0, 3));
        let e = euler(&b, 3).unwrap();
        let want = h0(&b, 3).unwrap().sub(&hn_top(&b, 3).unwrap()).unwrap();
        assert_eq!(e.values(), want.values(), "d={d}");
    }
}

#[test]
fn parse_render_is_a_fixed_point() {
    for (text, nvars, p) in POLYS {
        let f = FracPoly::parse(text, nvars, p).unwrap();
        let once = f.to_string();
        let twice = FracPoly::parse(&once, nvars, p).unwrap().to_string();
        assert_eq!(once, twice, "{text}");
    }
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -3i64..=3), 1..4).prop_map(|terms| {
        terms.into_iter().fold(IntPoly::zero(2), |acc, (a, b, c)| {
            acc.add(&IntPoly::monomial(vec![a, b], BigInt::from(c).into()))
        })
    })
}

fn curve() -> impl Strategy<Value = IntPoly> {
    (0..CURVES.len()).prop_map(|i| poly(CURVES[i]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplicity_is_symmetric(f in curve(), g in curve()) {
        prop_assert_eq!(local_multiplicity(&f, &g).unwrap(), local_multiplicity(&g, &f).unwrap());
    }

    #[test]
    fn multiplicity_ignores_multiples_of_the_other(f in curve(), g in curve(), h in small_poly()) {
        let shifted = g.add(&h.mul(&f));
        prop_assume!(!shifted.is_zero());
        prop_assert_eq!(local_multiplicity(&f, &g).unwrap(), local_multiplicity(&f, &shifted).unwrap());
    }

    #[test]
    fn h0_counts_equal_listing(n in 0usize..3, d in 0i64..5, i in 0u32..3, pi in 0usize..3) {
        let p = [2u64, 3, 5][pi];
        let got = count_h0_monomials(n, &q(d, 0, p), i).unwrap();
        prop_assert_eq!(got, big(count_by_listing(d * (p as i64).pow(i), n + 1)));
    }
}
