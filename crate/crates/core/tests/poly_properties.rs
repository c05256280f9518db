mod common;

use common::{bpoly, nonzero_upoly, small_int, upoly};
use derivkit::poly::resultant_y;
use derivkit::{rat, BPoly, Derivation, Point, Rational, SingularCertificate, UPoly};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Determinant over Q by elimination; independent of the subresultant code.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        acc *= &m[col][col];
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    acc
}

/// Sylvester determinant of two univariate polynomials of exact degrees m, n.
fn sylvester(f: &UPoly, g: &UPoly) -> Rational {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for k in 0..=m {
            row[i + k] = f.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for k in 0..=n {
            row[i + k] = g.coeff(n - k);
        }
        rows.push(row);
    }
    det(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in bpoly(3), g in bpoly(3), h in bpoly(2)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &BPoly::one(), f.clone());
    }

    #[test]
    fn leibniz(f in bpoly(3), g in bpoly(3), dx in bpoly(2), dy in bpoly(2)) {
        let d = Derivation::new(dx, dy);
        prop_assert_eq!(d.apply(&(&f * &g)), &(&d.apply(&f) * &g) + &(&f * &d.apply(&g)));
    }

    #[test]
    fn substitution_is_a_homomorphism(f in bpoly(2), g in bpoly(2), p in bpoly(2), q in bpoly(2)) {
        prop_assert_eq!((&f * &g).substitute(&p, &q), &f.substitute(&p, &q) * &g.substitute(&p, &q));
        prop_assert_eq!((&f + &g).substitute(&p, &q), &f.substitute(&p, &q) + &g.substitute(&p, &q));
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in bpoly(3), g in bpoly(3), x in small_int(), y in small_int()) {
        prop_assert_eq!((&f * &g).eval(&x, &y), f.eval(&x, &y) * g.eval(&x, &y));
    }

    #[test]
    fn exact_division_recovers_factor(f in bpoly(2), g in bpoly(2)) {
        prop_assume!(!g.is_zero());
        let prod = &f * &g;
        prop_assert_eq!(BPoly::divides(&g, &prod).unwrap(), Some(f.clone()));
    }

    #[test]
    fn gcd_divides_both(f in bpoly(2), g in bpoly(2), h in bpoly(1)) {
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let (a, b) = (&f * &h, &g * &h);
        let d = a.gcd(&b);
        prop_assert!(BPoly::divides(&d, &a).unwrap().is_some());
        prop_assert!(BPoly::divides(&d, &b).unwrap().is_some());
        prop_assert!(BPoly::divides(&h, &d).unwrap().is_some());
    }

    #[test]
    fn resultant_matches_sylvester_determinant(f in bpoly(3), g in bpoly(3), x0 in -4i64..=4) {
        prop_assume!(f.degree_y().is_some() && g.degree_y().is_some());
        let x0 = rat(x0);
        let (fl, gl) = (f.lead_y().eval(&x0), g.lead_y().eval(&x0));
        prop_assume!(!fl.is_zero() && !gl.is_zero());
        let r = resultant_y(&f, &g);
        prop_assert_eq!(r.eval(&x0), sylvester(&f.eval_x(&x0), &g.eval_x(&x0)));
    }

    #[test]
    fn upoly_division(f in upoly(6), g in nonzero_upoly(3)) {
        let (q, r) = f.div_rem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.degree().is_none_or(|dr| dr < g.degree().unwrap()));
    }

    #[test]
    fn factorization_expands_back(f in nonzero_upoly(5)) {
        let fac = f.factor();
        prop_assert_eq!(fac.expand(), f);
        for (q, _) in &fac.factors {
            prop_assert!(q.is_irreducible());
        }
    }

    #[test]
    fn certificate_agrees_with_grid(dx in bpoly(2), dy in bpoly(2)) {
        let d = Derivation::new(dx.clone(), dy.clone());
        prop_assume!(!d.is_zero());
        match d.certify_no_singular_points().unwrap() {
            SingularCertificate::NoSingularPoints => {
                for x in -3..=3 {
                    for y in -3..=3 {
                        prop_assert!(!d.is_singular_at(&Point::from_ints(x, y)));
                    }
                }
            }
            SingularCertificate::SingularPointFound(w) => {
                if let Some(p) = w.point {
                    prop_assert!(d.is_singular_at(&p));
                }
            }
            SingularCertificate::CommonFactor(c) => {
                prop_assert!(!c.is_constant());
                prop_assert!(BPoly::divides(&c, &dx).unwrap().is_some());
                prop_assert!(BPoly::divides(&c, &dy).unwrap().is_some());
            }
        }
    }
}

#[test]
fn certificate_finds_planted_rational_point() {
    // both coefficients vanish at (2, -1)
    let x = BPoly::x() - BPoly::from_int(2);
    let y = BPoly::y() + BPoly::one();
    let d = Derivation::new(&x * &x + &y * &BPoly::x(), &x * &BPoly::y() + y.clone());
    match d.certify_no_singular_points().unwrap() {
        SingularCertificate::SingularPointFound(w) => {
            assert!(
                d.is_singular_at(&Point::from_ints(2, -1)) && w.x_min_poly.eval(&rat(2)).is_zero()
            );
        }
        other => panic!("expected a singular point, got {other:?}"),
    }
}
