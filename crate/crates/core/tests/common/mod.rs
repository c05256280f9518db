#![allow(dead_code)]

use derivkit::{ratio, BPoly, ElementaryMap, Rational, UPoly};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

pub fn small_int() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(derivkit::rat)
}

pub fn upoly(max_degree: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(small_rational(), 0..=max_degree + 1).prop_map(UPoly::new)
}

pub fn nonzero_upoly(max_degree: usize) -> impl Strategy<Value = UPoly> {
    upoly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// Dense bivariate polynomial with total degree at most `max_degree`.
pub fn bpoly(max_degree: usize) -> impl Strategy<Value = BPoly> {
    let slots = (max_degree + 1) * (max_degree + 2) / 2;
    prop::collection::vec(prop_oneof![2 => Just(0i64), 3 => -4i64..=4], slots).prop_map(move |cs| {
        let mut it = cs.into_iter();
        let mut p = BPoly::zero();
        for total in 0..=max_degree {
            for j in 0..=total {
                let c = it.next().expect("slot");
                if c != 0 {
                    p = p + BPoly::monomial(derivkit::rat(c), total - j, j);
                }
            }
        }
        p
    })
}

pub fn elementary_map() -> impl Strategy<Value = ElementaryMap> {
    prop_oneof![
        (prop::array::uniform4(-2i64..=2), small_int(), small_int())
            .prop_filter("invertible", |(m, _, _)| m[0] * m[3] - m[1] * m[2] != 0)
            .prop_map(|(m, v1, v2)| {
                let r = derivkit::rat;
                ElementaryMap::affine([[r(m[0]), r(m[1])], [r(m[2]), r(m[3])]], [v1, v2])
                    .expect("invertible")
            }),
        (upoly(2), nonzero_rational())
            .prop_map(|(p, s)| ElementaryMap::elem_y(p, s).expect("nonzero scale")),
        (upoly(2), nonzero_rational())
            .prop_map(|(q, s)| ElementaryMap::elem_x(q, s).expect("nonzero scale")),
    ]
}

pub fn word(max_len: usize) -> impl Strategy<Value = derivkit::Automorphism> {
    prop::collection::vec(elementary_map(), 0..=max_len)
        .prop_map(|ls| derivkit::Automorphism::new(ls).expect("valid letters"))
}
