use std::fmt;

use super::{Rational, UPoly};
use crate::error::{Error, Result};

/// The field `Q[t]/(q)` for a monic irreducible `q` of degree at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: UPoly,
}

/// Element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberFieldElem {
    rep: UPoly,
}

impl NumberFieldElem {
    pub fn rep(&self) -> &UPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl fmt::Display for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display_in("t"))
    }
}

impl NumberField {
    /// Builds the field; rejects `q` unless it is irreducible over the rationals.
    pub fn new(q: &UPoly) -> Result<Self> {
        if q.degree().unwrap_or(0) == 0 || !q.is_irreducible() {
            return Err(Error::ReducibleModulus(q.to_string()));
        }
        Ok(NumberField { modulus: q.monic() })
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonconstant modulus")
    }

    pub fn elem(&self, p: &UPoly) -> NumberFieldElem {
        NumberFieldElem {
            rep: p.rem(&self.modulus),
        }
    }

    pub fn from_rational(&self, c: Rational) -> NumberFieldElem {
        self.elem(&UPoly::constant(c))
    }

    pub fn zero(&self) -> NumberFieldElem {
        NumberFieldElem { rep: UPoly::zero() }
    }

    pub fn one(&self) -> NumberFieldElem {
        NumberFieldElem { rep: UPoly::one() }
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(&self) -> NumberFieldElem {
        self.elem(&UPoly::x())
    }

    pub fn add(&self, a: &NumberFieldElem, b: &NumberFieldElem) -> NumberFieldElem {
        NumberFieldElem {
            rep: &a.rep + &b.rep,
        }
    }

    pub fn sub(&self, a: &NumberFieldElem, b: &NumberFieldElem) -> NumberFieldElem {
        NumberFieldElem {
            rep: &a.rep - &b.rep,
        }
    }

    pub fn mul(&self, a: &NumberFieldElem, b: &NumberFieldElem) -> NumberFieldElem {
        self.elem(&(&a.rep * &b.rep))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &NumberFieldElem) -> Option<NumberFieldElem> {
        if a.is_zero() {
            return None;
        }
        // q irreducible, so gcd(a, q) = 1 and s*a + t*q = 1.
        let (g, s, _) = a.rep.ext_gcd(&self.modulus);
        debug_assert!(g == UPoly::one());
        Some(self.elem(&s))
    }

    /// Evaluates a rational polynomial at a field element.
    pub fn eval(&self, p: &UPoly, at: &NumberFieldElem) -> NumberFieldElem {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, at), &self.from_rational(c.clone()))
        })
    }

    /// Monic gcd of two univariate polynomials over this field (coefficients
    /// lowest degree first). Empty when both inputs are zero.
    pub fn poly_gcd(&self, a: &[NumberFieldElem], b: &[NumberFieldElem]) -> Vec<NumberFieldElem> {
        let mut r0 = self.trim(a.to_vec());
        let mut r1 = self.trim(b.to_vec());
        while !r1.is_empty() {
            let r = self.poly_rem(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        self.poly_monic(r0)
    }

    fn trim(&self, mut p: Vec<NumberFieldElem>) -> Vec<NumberFieldElem> {
        while p.last().is_some_and(NumberFieldElem::is_zero) {
            p.pop();
        }
        p
    }

    fn poly_monic(&self, p: Vec<NumberFieldElem>) -> Vec<NumberFieldElem> {
        match p.last() {
            None => p,
            Some(l) => {
                let inv = self.inv(l).expect("nonzero lead");
                p.iter().map(|c| self.mul(c, &inv)).collect()
            }
        }
    }

    fn poly_rem(&self, a: &[NumberFieldElem], d: &[NumberFieldElem]) -> Vec<NumberFieldElem> {
        let dd = d.len() - 1;
        let lead_inv = self.inv(&d[dd]).expect("trimmed divisor");
        let mut rem = a.to_vec();
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = self.mul(&rem[top], &lead_inv);
            if !c.is_zero() {
                for (j, dc) in d.iter().enumerate() {
                    let k = top - dd + j;
                    rem[k] = self.sub(&rem[k], &self.mul(&c, dc));
                }
            }
            rem.pop();
            rem = self.trim(rem);
        }
        rem
    }
}

/// Reduces the `y`-coefficients of a bivariate polynomial modulo the field's
/// defining polynomial, i.e. substitutes `x := t`.
pub(crate) fn specialize_x(field: &NumberField, f: &super::BPoly) -> Vec<NumberFieldElem> {
    field.trim(f.y_coeffs().iter().map(|c| field.elem(c)).collect())
}

impl NumberFieldElem {
    pub fn is_rational(&self) -> bool {
        self.rep.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rep.coeff(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, BPoly};

    fn sqrt2() -> NumberField {
        NumberField::new(&UPoly::from_ints(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn rejects_reducible_modulus() {
        assert!(NumberField::new(&UPoly::from_ints(&[-1, 0, 1])).is_err());
        assert!(NumberField::new(&UPoly::one()).is_err());
    }

    #[test]
    fn generator_squares_to_two() {
        let k = sqrt2();
        let t = k.generator();
        assert_eq!(k.mul(&t, &t), k.from_rational(rat(2)));
        let inv = k.inv(&t).unwrap();
        assert_eq!(k.mul(&inv, &t), k.one());
    }

    #[test]
    fn gcd_over_extension() {
        // y^2 - 2 and y - t share the root y = t
        let k = sqrt2();
        let a = vec![k.from_rational(rat(-2)), k.zero(), k.one()];
        let b = vec![k.sub(&k.zero(), &k.generator()), k.one()];
        let g = k.poly_gcd(&a, &b);
        assert_eq!(g, b);
        // y^2 + 1 is coprime to y - t
        let c = vec![k.one(), k.zero(), k.one()];
        assert_eq!(k.poly_gcd(&c, &b), vec![k.one()]);
    }

    #[test]
    fn specialization_substitutes_generator() {
        let k = sqrt2();
        let f = BPoly::from_terms(&[(1, 2, 0), (1, 0, 1)]); // x^2 + y
        let s = specialize_x(&k, &f);
        assert_eq!(s, vec![k.from_rational(rat(2)), k.one()]);
    }

    #[test]
    fn rational_elements() {
        let k = sqrt2();
        assert_eq!(k.from_rational(rat(3)).as_rational(), Some(rat(3)));
        assert_eq!(k.generator().as_rational(), None);
    }
}
