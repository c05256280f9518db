//! Truncated formal power series and formal solutions through a point.
//!
//! For a derivation `D = a ∂x + b ∂y` and a point `p` where `D` does not
//! vanish, there is a unique pair `(φ, ψ)` of power series in `t` with
//! `φ(0) = p.x`, `ψ(0) = p.y`, `φ' = a(φ, ψ)` and `ψ' = b(φ, ψ)`. Everything
//! here works modulo `t^N` for a caller-chosen order `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::automorphism::RawEndo;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::poly::{rat, write_term, BPoly, Point, Rational, UPoly};

/// Order used when the caller has no preference.
pub const DEFAULT_ORDER: usize = 8;

/// `c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        TruncatedSeries::new(vec![c], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        TruncatedSeries::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(self.coeffs.iter().take(order).cloned().collect(), order)
    }

    /// Agreement of the first `order` coefficients.
    pub fn eq_mod(&self, other: &TruncatedSeries, order: usize) -> bool {
        (0..order).all(|k| self.coeff(k) == other.coeff(k))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `d/dt`, one order shorter.
    pub fn derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        }
    }

    /// `p(self)` for a univariate polynomial `p`.
    pub fn eval_poly(&self, p: &UPoly) -> Self {
        let n = self.order();
        p.coeffs()
            .iter()
            .rev()
            .fold(TruncatedSeries::zero(n), |acc, c| {
                &(&acc * self) + &TruncatedSeries::constant(c.clone(), n)
            })
    }

    /// `self(inner(t))`; `None` unless `inner` has zero constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> Option<Self> {
        if !inner.coeff(0).is_zero() {
            return None;
        }
        let n = self.order().min(inner.order());
        let outer = UPoly::new(self.coeffs[..n].to_vec());
        Some(inner.truncate(n).eval_poly(&outer))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            write_term(f, c, &mono, first)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

/// A formal solution `(φ, ψ)` of a derivation through a base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionPair {
    point: Point,
    phi: TruncatedSeries,
    psi: TruncatedSeries,
}

impl SolutionPair {
    /// Assembles a pair without checking that it solves anything; see
    /// [`check_chain_rule`].
    pub fn from_parts(point: Point, phi: TruncatedSeries, psi: TruncatedSeries) -> Self {
        SolutionPair { point, phi, psi }
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn phi(&self) -> &TruncatedSeries {
        &self.phi
    }

    pub fn psi(&self) -> &TruncatedSeries {
        &self.psi
    }

    pub fn order(&self) -> usize {
        self.phi.order().min(self.psi.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        SolutionPair {
            point: self.point.clone(),
            phi: self.phi.truncate(order),
            psi: self.psi.truncate(order),
        }
    }
}

/// `f(φ, ψ)` modulo `t^order`.
fn substitute(
    f: &BPoly,
    phi: &TruncatedSeries,
    psi: &TruncatedSeries,
    order: usize,
) -> TruncatedSeries {
    let (phi, psi) = (phi.truncate(order), psi.truncate(order));
    f.y_coeffs()
        .iter()
        .rev()
        .fold(TruncatedSeries::zero(order), |acc, c| {
            &(&acc * &psi) + &phi.eval_poly(c)
        })
}

/// The unique solution of `D` through `p`, modulo `t^order`.
///
/// Coefficient `k + 1` of `φ` is `[t^k] a(φ, ψ) / (k + 1)`, which only
/// involves coefficients up to `k`.
pub fn solve_through(d: &Derivation, p: &Point, order: usize) -> Result<SolutionPair> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if d.is_singular_at(p) {
        return Err(Error::SingularBasePoint(Box::new(p.clone())));
    }
    let mut phi = TruncatedSeries::constant(p.x.clone(), order);
    let mut psi = TruncatedSeries::constant(p.y.clone(), order);
    for k in 0..order - 1 {
        let next = rat(k as i64 + 1).recip();
        let da = substitute(d.dx(), &phi, &psi, k + 1).coeff(k) * &next;
        let db = substitute(d.dy(), &phi, &psi, k + 1).coeff(k) * &next;
        phi.coeffs[k + 1] = da;
        psi.coeffs[k + 1] = db;
    }
    Ok(SolutionPair {
        point: p.clone(),
        phi,
        psi,
    })
}

/// The image of `f` under `x ↦ φ`, `y ↦ ψ`.
pub fn eval_hom(s: &SolutionPair, f: &BPoly) -> TruncatedSeries {
    substitute(f, &s.phi, &s.psi, s.order())
}

/// `d/dt f(φ, ψ) ≡ (D f)(φ, ψ)` modulo `t^(N-1)`.
pub fn check_chain_rule(s: &SolutionPair, d: &Derivation, f: &BPoly) -> bool {
    let n = s.order();
    let lhs = eval_hom(s, f).derivative();
    let rhs = eval_hom(s, &d.apply(f));
    lhs.eq_mod(&rhs, n.saturating_sub(1))
}

/// For `ρ` commuting with `D` and fixing the regular point `p`, checks that
/// the solution through `p` is unchanged by `ρ`: `ρ(z)(φ, ψ) ≡ z(φ, ψ)` for
/// `z = x, y`.
pub fn lemma1_fixed_solution_check(
    d: &Derivation,
    rho: &RawEndo,
    p: &Point,
    order: usize,
) -> Result<bool> {
    if !rho.commutes(d) {
        return Err(Error::NotCommuting);
    }
    if !rho.fixes_point(p) {
        return Err(Error::PointNotFixed(Box::new(p.clone())));
    }
    let s = solve_through(d, p, order)?;
    Ok(eval_hom(&s, rho.f()).eq_mod(&s.phi, order) && eval_hom(&s, rho.g()).eq_mod(&s.psi, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn exp_field() -> Derivation {
        Derivation::new(BPoly::one(), BPoly::y())
    }

    fn cubic_b_field() -> Derivation {
        Derivation::new(BPoly::one(), BPoly::from_terms(&[(2, 1, 1), (1, 3, 0)]))
    }

    fn factorial(k: i64) -> i64 {
        (1..=k).product()
    }

    #[test]
    fn exponential_coefficients() {
        let s = solve_through(&exp_field(), &Point::from_ints(0, 1), 6).unwrap();
        assert_eq!(*s.phi(), TruncatedSeries::t(6));
        for k in 0..6 {
            assert_eq!(s.psi().coeff(k), ratio(1, factorial(k as i64)));
        }
    }

    #[test]
    fn stable_curve_is_in_kernel() {
        let s = solve_through(&cubic_b_field(), &Point::from_ints(1, -1), 8).unwrap();
        let curve = BPoly::from_terms(&[(2, 0, 1), (1, 2, 0), (1, 0, 0)]);
        assert!(eval_hom(&s, &curve).is_zero());
    }

    #[test]
    fn singular_point_and_zero_order() {
        let euler = Derivation::new(BPoly::x(), BPoly::y());
        let origin = Point::from_ints(0, 0);
        assert_eq!(
            solve_through(&euler, &origin, 4),
            Err(Error::SingularBasePoint(Box::new(origin.clone())))
        );
        assert_eq!(
            solve_through(&exp_field(), &origin, 0),
            Err(Error::ZeroOrder)
        );
    }

    #[test]
    fn generators_and_constants() {
        let s = solve_through(&cubic_b_field(), &Point::from_ints(1, -1), 5).unwrap();
        assert_eq!(eval_hom(&s, &BPoly::x()), *s.phi());
        assert_eq!(
            eval_hom(&s, &BPoly::from_int(7)),
            TruncatedSeries::constant(rat(7), 5)
        );
    }

    #[test]
    fn chain_rule_by_hand() {
        // d/dt (t e^t) = e^t + t e^t
        let d = exp_field();
        let s = solve_through(&d, &Point::from_ints(0, 1), 7).unwrap();
        let xy = BPoly::x() * BPoly::y();
        assert!(check_chain_rule(&s, &d, &xy));
        assert!(check_chain_rule(&s, &d, &BPoly::x()));
        let lhs = eval_hom(&s, &xy).derivative();
        assert_eq!(lhs.coeff(0), rat(1));
        assert_eq!(lhs.coeff(1), rat(2));
        assert_eq!(lhs.coeff(2), ratio(3, 2));
    }

    #[test]
    fn perturbation_breaks_chain_rule() {
        let d = cubic_b_field();
        let s = solve_through(&d, &Point::from_ints(1, -1), 8).unwrap();
        for k in 1..8 {
            let mut psi = s.psi().coeffs().to_vec();
            psi[k] += rat(1);
            let bad = SolutionPair::from_parts(
                s.point().clone(),
                s.phi().clone(),
                TruncatedSeries::new(psi, 8),
            );
            assert!(!check_chain_rule(&bad, &d, &BPoly::y()), "step {k}");
        }
    }

    #[test]
    fn fixed_solution_check_cases() {
        let d = cubic_b_field();
        let t = rat(2);
        let g = BPoly::from_x(UPoly::from_ints(&[1, 0, 1])).scale(&((&t - rat(1)) / rat(2)))
            + BPoly::y().scale(&t);
        let rho = RawEndo::new(BPoly::x(), g);
        let p = Point::from_ints(1, -1);
        assert_eq!(lemma1_fixed_solution_check(&d, &rho, &p, 8), Ok(true));
        assert_eq!(
            lemma1_fixed_solution_check(&d, &RawEndo::identity(), &p, 8),
            Ok(true)
        );
        let shift = RawEndo::new(BPoly::x() + BPoly::one(), BPoly::y());
        let q = Point::from_ints(0, 0);
        assert_eq!(
            lemma1_fixed_solution_check(&Derivation::partial_x(), &shift, &q, 8),
            Err(Error::PointNotFixed(Box::new(q.clone())))
        );
        let twist = RawEndo::new(BPoly::x(), BPoly::x() + BPoly::y());
        assert_eq!(
            lemma1_fixed_solution_check(&d, &twist, &q, 8),
            Err(Error::NotCommuting)
        );
    }

    #[test]
    fn composition_and_display() {
        // exp(t) - 1 composed into 1 + s gives exp(...) shifted
        let e = solve_through(&exp_field(), &Point::from_ints(0, 1), 4).unwrap();
        let inner = &e.psi().clone() - &TruncatedSeries::constant(rat(1), 4);
        let outer = TruncatedSeries::new(vec![rat(1), rat(1)], 4);
        assert_eq!(outer.compose(&inner), Some(e.psi().clone()));
        assert_eq!(outer.compose(e.psi()), None);
        assert_eq!(e.psi().to_string(), "1 + t + 1/2*t^2 + 1/6*t^3 + O(t^4)");
    }
}
