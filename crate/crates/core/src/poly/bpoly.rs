use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::upoly::forward_owned;
use super::{rat, write_term, Rational, UPoly};
use crate::error::{Error, Result};

/// Bivariate polynomial `sum_j c_j(x) y^j`, stored as its `y`-coefficients in
/// ascending order. The top coefficient is never the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BPoly {
    coeffs: Vec<UPoly>,
}

impl BPoly {
    pub fn new(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        BPoly { coeffs }
    }

    pub fn zero() -> Self {
        BPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BPoly::constant(Rational::one())
    }

    pub fn x() -> Self {
        BPoly::from_x(UPoly::x())
    }

    pub fn y() -> Self {
        BPoly::new(vec![UPoly::zero(), UPoly::one()])
    }

    pub fn constant(c: Rational) -> Self {
        BPoly::from_x(UPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        BPoly::constant(rat(c))
    }

    /// `p(x)` viewed in two variables.
    pub fn from_x(p: UPoly) -> Self {
        BPoly::new(vec![p])
    }

    /// `p(y)` viewed in two variables.
    pub fn from_y(p: &UPoly) -> Self {
        BPoly::new(
            p.coeffs()
                .iter()
                .map(|c| UPoly::constant(c.clone()))
                .collect(),
        )
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: Rational, i: usize, j: usize) -> Self {
        let mut coeffs = vec![UPoly::zero(); j];
        coeffs.push(UPoly::monomial(c, i));
        BPoly::new(coeffs)
    }

    /// Sum of `c * x^i * y^j` for integer triples `(c, i, j)`.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        terms.iter().fold(BPoly::zero(), |acc, &(c, i, j)| {
            acc + BPoly::monomial(rat(c), i, j)
        })
    }

    pub fn y_coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    /// Coefficient of `y^j` as a polynomial in `x`.
    pub fn y_coeff(&self, j: usize) -> UPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(j)
            .map(|c| c.coeff(i))
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(i, j, _)| i + j).max()
    }

    /// Leading coefficient in `y` (zero for the zero polynomial).
    pub fn lead_y(&self) -> UPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 if self.coeffs[0].is_constant() => Some(self.coeffs[0].constant_term()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// `Some(p)` when the polynomial does not involve `y`.
    pub fn as_x_poly(&self) -> Option<UPoly> {
        (self.coeffs.len() <= 1).then(|| self.y_coeff(0))
    }

    /// `Some(p)` with `self = p(y)` when the polynomial does not involve `x`.
    pub fn as_y_poly(&self) -> Option<UPoly> {
        self.coeffs
            .iter()
            .all(UPoly::is_constant)
            .then(|| UPoly::new(self.coeffs.iter().map(UPoly::constant_term).collect()))
    }

    /// Nonzero terms as `(x power, y power, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(j, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v))
        })
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c.eval(x))
    }

    /// `self(x0, y)` as a polynomial in `y`.
    pub fn eval_x(&self, x0: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }

    /// `self(x, y0)` as a polynomial in `x`.
    pub fn eval_y(&self, y0: &Rational) -> UPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| &acc.scale(y0) + c)
    }

    pub fn scale(&self, s: &Rational) -> BPoly {
        BPoly::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Multiply every `y`-coefficient by `p(x)`.
    pub fn mul_x_poly(&self, p: &UPoly) -> BPoly {
        BPoly::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    pub fn pow(&self, e: u32) -> BPoly {
        let mut result = BPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Power with a signed exponent; negative exponents are rejected.
    pub fn try_pow(&self, e: i64) -> Result<BPoly> {
        let e = u32::try_from(e).map_err(|_| Error::NegativeExponent(e))?;
        Ok(self.pow(e))
    }

    pub fn partial_x(&self) -> BPoly {
        BPoly::new(self.coeffs.iter().map(UPoly::derivative).collect())
    }

    pub fn partial_y(&self) -> BPoly {
        BPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&rat(j as i64)))
                .collect(),
        )
    }

    /// `self(p, q)`: replaces `x` by `p` and `y` by `q`.
    pub fn substitute(&self, p: &BPoly, q: &BPoly) -> BPoly {
        // Horner in y, each coefficient by Horner in x.
        let mut acc = BPoly::zero();
        for c in self.coeffs.iter().rev() {
            let cx = c.coeffs().iter().rev().fold(BPoly::zero(), |a, k| {
                &(&a * p) + &BPoly::constant(k.clone())
            });
            acc = &(&acc * q) + &cx;
        }
        acc
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> BPoly {
        let mut out = BPoly::zero();
        for (i, j, c) in self.terms() {
            out = out + BPoly::monomial(c.clone(), j, i);
        }
        out
    }

    /// Quotient `q` with `divisor * q = self`, if it exists.
    pub fn exact_div(&self, divisor: &BPoly) -> Result<Option<BPoly>> {
        let dy = divisor.degree_y().ok_or(Error::ZeroDivisor)?;
        let lead = divisor.lead_y();
        let mut rem = self.clone();
        let mut quot = vec![UPoly::zero(); self.coeffs.len().saturating_sub(dy)];
        while let Some(ry) = rem.degree_y() {
            if ry < dy {
                return Ok(None);
            }
            let Some(t) = rem.lead_y().exact_div(&lead) else {
                return Ok(None);
            };
            let shift = ry - dy;
            let term = BPoly::monomial_in_y(t.clone(), shift);
            rem = &rem - &(&term * divisor);
            quot[shift] = &quot[shift] + &t;
        }
        Ok(Some(BPoly::new(quot)))
    }

    /// Ideal membership in a principal ideal: `Some(q)` iff `self = divisor * q`.
    pub fn divides(divisor: &BPoly, g: &BPoly) -> Result<Option<BPoly>> {
        g.exact_div(divisor)
    }

    fn monomial_in_y(c: UPoly, j: usize) -> BPoly {
        let mut coeffs = vec![UPoly::zero(); j];
        coeffs.push(c);
        BPoly::new(coeffs)
    }

    /// Monic gcd (in `Q[x]`) of the `y`-coefficients.
    pub fn content_y(&self) -> UPoly {
        self.coeffs.iter().fold(UPoly::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part_y(&self) -> BPoly {
        if self.is_zero() {
            return BPoly::zero();
        }
        let c = self.content_y();
        BPoly::new(
            self.coeffs
                .iter()
                .map(|k| k.exact_div(&c).expect("content divides"))
                .collect(),
        )
    }

    /// Pseudo-remainder in `y`: `lc(d)^(deg f - deg d + 1) * f mod d`.
    pub fn prem_y(&self, divisor: &BPoly) -> BPoly {
        let dy = divisor.degree_y().expect("nonzero divisor");
        let Some(fy) = self.degree_y() else {
            return BPoly::zero();
        };
        if fy < dy {
            return self.clone();
        }
        let lead = divisor.lead_y();
        let mut rem = self.clone();
        let mut steps = fy - dy + 1;
        while let Some(ry) = rem.degree_y() {
            if ry < dy {
                break;
            }
            let term = BPoly::monomial_in_y(rem.lead_y(), ry - dy);
            rem = &rem.mul_x_poly(&lead) - &(&term * divisor);
            steps -= 1;
        }
        rem.mul_x_poly(&lead.pow(steps as u32))
    }

    /// Scales so that the leading coefficient (highest `y`, then highest `x`)
    /// is one.
    pub fn normalized(&self) -> BPoly {
        match self.coeffs.last().and_then(UPoly::lead) {
            Some(l) => self.scale(&l.recip()),
            None => BPoly::zero(),
        }
    }

    /// Greatest common divisor in `Q[x, y]`, normalized by [`BPoly::normalized`].
    pub fn gcd(&self, other: &BPoly) -> BPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content_y().gcd(&other.content_y());
        let (mut r0, mut r1) = (self.primitive_part_y(), other.primitive_part_y());
        if r0.degree_y() < r1.degree_y() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let r = r0.prem_y(&r1);
            r0 = r1;
            r1 = r.primitive_part_y();
        }
        let core = if r0.degree_y() == Some(0) {
            BPoly::one()
        } else {
            r0.primitive_part_y()
        };
        core.mul_x_poly(&content).normalized()
    }
}

impl fmt::Display for BPoly {
    /// Terms by descending total degree, then descending power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(usize, usize, &Rational)> = self.terms().collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        for (n, (i, j, c)) in terms.into_iter().enumerate() {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                (_, 0) => super::monomial_text("x", i),
                (0, _) => super::monomial_text("y", j),
                _ => format!(
                    "{}*{}",
                    super::monomial_text("x", i),
                    super::monomial_text("y", j)
                ),
            };
            write_term(f, c, &mono, n == 0)?;
        }
        Ok(())
    }
}

impl From<UPoly> for BPoly {
    fn from(p: UPoly) -> Self {
        BPoly::from_x(p)
    }
}

impl Add for &BPoly {
    type Output = BPoly;
    fn add(self, rhs: &BPoly) -> BPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BPoly::new((0..n).map(|j| &self.y_coeff(j) + &rhs.y_coeff(j)).collect())
    }
}

impl Sub for &BPoly {
    type Output = BPoly;
    fn sub(self, rhs: &BPoly) -> BPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BPoly::new((0..n).map(|j| &self.y_coeff(j) - &rhs.y_coeff(j)).collect())
    }
}

impl Mul for &BPoly {
    type Output = BPoly;
    fn mul(self, rhs: &BPoly) -> BPoly {
        if self.is_zero() || rhs.is_zero() {
            return BPoly::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BPoly::new(out)
    }
}

impl Neg for &BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        BPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        -&self
    }
}

forward_owned!(BPoly, Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn x() -> BPoly {
        BPoly::x()
    }
    fn y() -> BPoly {
        BPoly::y()
    }

    #[test]
    fn difference_of_squares() {
        let p = (x() + y()) * (x() - y());
        assert_eq!(p, x().pow(2) - y().pow(2));
        assert_eq!(&p * &BPoly::zero(), BPoly::zero());
    }

    #[test]
    fn scalar_half_of_cofactor_product() {
        // (1/2)(4xy + 2x^3 + 2x) = 2xy + x^3 + x
        let p = BPoly::from_terms(&[(4, 1, 1), (2, 3, 0), (2, 1, 0)]);
        assert_eq!(
            p.scale(&ratio(1, 2)),
            BPoly::from_terms(&[(2, 1, 1), (1, 3, 0), (1, 1, 0)])
        );
    }

    #[test]
    fn partials() {
        let f = x().pow(3) + &x() * &y().pow(2);
        assert_eq!(f.partial_y(), BPoly::from_terms(&[(2, 1, 1)]));
        assert_eq!(BPoly::from_int(7).partial_x(), BPoly::zero());
        let g = BPoly::from_terms(&[(2, 1, 1), (1, 3, 0), (1, 1, 0)]);
        assert_eq!(
            g.partial_x(),
            BPoly::from_terms(&[(2, 0, 1), (3, 2, 0), (1, 0, 0)])
        );
    }

    #[test]
    fn substitution() {
        let f = BPoly::from_terms(&[(1, 2, 1)]);
        assert_eq!(f.substitute(&x(), &y()), f);
        let got = f.substitute(&(x() + BPoly::one()), &y().scale(&rat(2)));
        let want = (x() + BPoly::one()).pow(2) * y().scale(&rat(2));
        assert_eq!(got, want);
        // a(x) composed with x + c is a(x + c)
        let a = UPoly::from_ints(&[1, -2, 0, 3]);
        let c = ratio(5, 3);
        let shifted =
            BPoly::from_x(a.clone()).substitute(&(x() + BPoly::constant(c.clone())), &(y() * x()));
        assert_eq!(shifted, BPoly::from_x(a.shift(&c)));
    }

    #[test]
    fn divisibility() {
        let f = BPoly::from_terms(&[(2, 0, 1), (1, 2, 0), (1, 0, 0)]);
        let g = BPoly::from_terms(&[(4, 1, 1), (2, 3, 0), (2, 1, 0)]);
        assert_eq!(
            BPoly::divides(&f, &g).unwrap(),
            Some(BPoly::from_terms(&[(2, 1, 0)]))
        );
        assert_eq!(BPoly::divides(&x(), &BPoly::one()).unwrap(), None);
        assert_eq!(
            BPoly::divides(&(x() - y()), &(x().pow(2) - y().pow(2))).unwrap(),
            Some(x() + y())
        );
        assert!(matches!(
            BPoly::divides(&BPoly::zero(), &x()),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn negative_power_rejected() {
        assert!(matches!(x().try_pow(-1), Err(Error::NegativeExponent(-1))));
        assert_eq!(x().try_pow(3).unwrap(), x().pow(3));
    }

    #[test]
    fn gcd_finds_shared_factor() {
        let common = &x() * &y() + BPoly::one();
        let a = &common * &(x() - BPoly::from_int(2));
        let b = &common * &(y().pow(2) + x());
        assert_eq!(a.gcd(&b), common);
        assert_eq!(x().gcd(&y()), BPoly::one());
        let xy = &x() * &y();
        assert_eq!(xy.gcd(&(&x() * &(y() + BPoly::one()))), x());
    }

    #[test]
    fn display() {
        let f = BPoly::from_terms(&[(2, 1, 1), (1, 3, 0), (1, 1, 0), (-1, 0, 0)]);
        assert_eq!(f.to_string(), "x^3 + 2*x*y + x - 1");
        assert_eq!(BPoly::zero().to_string(), "0");
    }
}
