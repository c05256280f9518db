//! Resultant with respect to `y` by the subresultant pseudo-remainder sequence.
//!
//! Coefficients live in the integral domain `Q[x]`, so every division in the
//! sequence is exact.

use super::{BPoly, UPoly};

/// `Res_y(f, g)` as a polynomial in `x`. Zero if either input is zero.
///
/// For `f, g` of `y`-degrees `m, n` this is the determinant of the
/// `(m + n)`-square Sylvester matrix. Two polynomials free of `y` have
/// resultant one (the empty determinant).
pub fn resultant_y(f: &BPoly, g: &BPoly) -> UPoly {
    let (Some(mut da), Some(mut db)) = (f.degree_y(), g.degree_y()) else {
        return UPoly::zero();
    };
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    if db == 0 {
        // Res(a, b0) = b0^deg(a)
        let r = b.lead_y().pow(da as u32);
        return if negate { -r } else { r };
    }

    let mut g_acc = UPoly::one();
    let mut h_acc = UPoly::one();
    loop {
        let (Some(da), Some(db)) = (a.degree_y(), b.degree_y()) else {
            return UPoly::zero();
        };
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem_y(&b);
        a = b;
        let divisor = &g_acc * &h_acc.pow(delta as u32);
        b = BPoly::new(
            r.y_coeffs()
                .iter()
                .map(|c| {
                    c.exact_div(&divisor)
                        .expect("subresultant division is exact")
                })
                .collect(),
        );
        g_acc = a.lead_y();
        h_acc = if delta == 0 {
            h_acc
        } else {
            g_acc
                .pow(delta as u32)
                .exact_div(&h_acc.pow(delta as u32 - 1))
                .expect("subresultant division is exact")
        };
        match b.degree_y() {
            None => return UPoly::zero(),
            Some(0) => {
                let da = a.degree_y().expect("nonzero");
                let lb = b.lead_y().pow(da as u32);
                let r = if da == 0 {
                    lb
                } else {
                    lb.exact_div(&h_acc.pow(da as u32 - 1))
                        .expect("subresultant division is exact")
                };
                return if negate { -r } else { r };
            }
            Some(_) => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn singular_free_pair_resultant() {
        let a = BPoly::from_terms(&[(1, 0, 0), (1, 1, 1), (1, 3, 0)]);
        let b = BPoly::from_terms(&[(1, 1, 0), (1, 2, 1)]);
        assert_eq!(resultant_y(&a, &b), UPoly::monomial(rat(-1), 5));
    }

    #[test]
    fn unit_resultant() {
        let y = BPoly::y();
        // det [[1, 0], [1, -1]]: a unit, no common zero
        assert_eq!(resultant_y(&y, &(&y - &BPoly::one())), -UPoly::one());
    }

    #[test]
    fn linear_pair() {
        let (x, y) = (BPoly::x(), BPoly::y());
        assert_eq!(
            resultant_y(&(&y - &x), &(&y + &x)),
            UPoly::from_ints(&[0, 2])
        );
    }

    #[test]
    fn constant_in_y_factor() {
        // Res_y(y^2 + 1, x) = x^2
        let f = BPoly::y().pow(2) + BPoly::one();
        assert_eq!(resultant_y(&f, &BPoly::x()), UPoly::x().pow(2));
        assert_eq!(resultant_y(&BPoly::x(), &f), UPoly::x().pow(2));
    }
}
