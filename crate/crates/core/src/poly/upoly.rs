use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{monomial_text, rat, write_term, Rational};

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree()` returns `None` for it. `None` sorts below every
/// `Some(n)`, which is the usual "degree of zero is minus infinity" convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    /// The variable itself.
    pub fn x() -> Self {
        UPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        UPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of the `k`-th power (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> UPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat(k as i64 + 1));
        }
        UPoly::new(coeffs)
    }

    pub fn scale(&self, s: &Rational) -> UPoly {
        if s.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut result = UPoly::one();
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

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &UPoly) -> UPoly {
        self.coeffs.iter().rev().fold(UPoly::zero(), |acc, c| {
            &(&acc * inner) + &UPoly::constant(c.clone())
        })
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &Rational) -> UPoly {
        self.compose(&UPoly::new(vec![c.clone(), Rational::one()]))
    }

    /// Euclidean division. Returns `None` for a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> Option<(UPoly, UPoly)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.lead()?.recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor)
            .expect("division by zero polynomial")
            .1
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> UPoly {
        match self.lead() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> UPoly {
        if self.is_constant() {
            return if self.is_zero() {
                UPoly::zero()
            } else {
                UPoly::one()
            };
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `s_i` with
    /// `self = lead * prod s_i^i`. Entries with `s_i = 1` are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a.monic(), i));
            }
            i += 1;
        }
        out
    }

    /// `(scale, ints)` with `self = scale * sum ints[k] x^k`, where the integer
    /// polynomial is primitive with positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if nums.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        let ints = nums.iter().map(|n| n / &content).collect();
        (Rational::new(content, den), ints)
    }

    /// All distinct rational roots, ascending, by the rational root theorem.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_constant() {
            return Vec::new();
        }
        let (_, ints) = self.primitive_integer();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(Rational::zero());
        }
        let trimmed = &ints[low..];
        if trimmed.len() > 1 {
            let a0 = trimmed[0].abs();
            let an = trimmed[trimmed.len() - 1].abs();
            match (small_divisors(&a0), small_divisors(&an)) {
                (Some(ps), Some(qs)) => {
                    let poly = UPoly::new(
                        trimmed
                            .iter()
                            .map(|c| Rational::from_integer(c.clone()))
                            .collect(),
                    );
                    for p in &ps {
                        for q in &qs {
                            for cand in [
                                Rational::new(p.clone(), q.clone()),
                                -Rational::new(p.clone(), q.clone()),
                            ] {
                                if !roots.contains(&cand) && poly.eval(&cand).is_zero() {
                                    roots.push(cand);
                                }
                            }
                        }
                    }
                }
                // Coefficients too large to enumerate divisors: read the roots
                // off the linear factors instead.
                _ => {
                    for (fac, _) in self.factor().factors {
                        if fac.degree() == Some(1) {
                            roots.push(-fac.coeff(0));
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

/// Positive divisors of `n`, or `None` when trial division would be too slow.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64().filter(|&v| v <= 1u64 << 40)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Displays a [`UPoly`] using a chosen variable name.
pub struct InVar<'a> {
    poly: &'a UPoly,
    var: &'a str,
}

impl UPoly {
    pub fn display_in<'a>(&'a self, var: &'a str) -> InVar<'a> {
        InVar { poly: self, var }
    }
}

impl fmt::Display for InVar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, &monomial_text(self.var, k), first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(UPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn zero_degree_is_below_naturals() {
        assert_eq!(UPoly::zero().degree(), None);
        assert!(UPoly::zero().degree() < UPoly::one().degree());
        assert_eq!(UPoly::from_ints(&[0, 0, 0]), UPoly::zero());
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn squarefree_of_power() {
        let x5 = UPoly::x().pow(5);
        assert_eq!(x5.squarefree_part(), UPoly::x());
        assert_eq!(x5.squarefree_decomposition(), vec![(UPoly::x(), 5)]);
    }

    #[test]
    fn yun_separates_multiplicities() {
        let p = UPoly::from_ints(&[-1, 1]); // x - 1
        let q = UPoly::from_ints(&[2, 1]); // x + 2
        let f = (&p * &q.pow(3)).scale(&rat(7));
        assert_eq!(f.squarefree_decomposition(), vec![(p, 1), (q, 3)]);
    }

    #[test]
    fn rational_roots_of_minus_x5() {
        let f = UPoly::monomial(rat(-1), 5);
        assert_eq!(f.rational_roots(), vec![Rational::zero()]);
        // 6x^2 - x - 1 = (3x+1)(2x-1)
        let g = UPoly::from_ints(&[-1, -1, 6]);
        assert_eq!(g.rational_roots(), vec![ratio(-1, 3), ratio(1, 2)]);
    }

    #[test]
    fn antiderivative_inverts_derivative() {
        let f = UPoly::new(vec![rat(0), ratio(1, 2), rat(3), rat(-4)]);
        assert_eq!(f.derivative().antiderivative(), f);
    }

    #[test]
    fn shift_matches_evaluation() {
        let f = UPoly::from_ints(&[1, 2, 0, 5]);
        let c = ratio(-3, 2);
        let g = f.shift(&c);
        for t in [-2, 0, 1, 4] {
            assert_eq!(g.eval(&rat(t)), f.eval(&(rat(t) + &c)));
        }
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = UPoly::from_ints(&[1, 0, 3, 1]);
        let b = UPoly::from_ints(&[2, 1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, UPoly::one());
    }

    #[test]
    fn display_uses_ascii_powers() {
        let f = UPoly::new(vec![ratio(-1, 2), rat(0), ratio(-1, 2)]);
        assert_eq!(f.to_string(), "-1/2*x^2 - 1/2");
        assert_eq!(
            UPoly::from_ints(&[-1, -2, 1, 1, 1, 1]).to_string(),
            "x^5 + x^4 + x^3 + x^2 - 2*x - 1"
        );
    }
}
