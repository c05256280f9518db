//! Plane polynomial automorphisms.
//!
//! An endomorphism `ρ` of `Q[x, y]` is determined by the images
//! `(ρ(x), ρ(y)) = (f, g)`, and acts by `ρ(h) = h(f, g)`. Products are ring
//! products: `(ρ1 ρ2)(h) = ρ1(ρ2(h))`, whose images are `(f2(f1, g1), g2(f1, g1))`.
//!
//! In two variables every automorphism is a composition of affine and
//! triangular maps, so [`Automorphism`] stores a word in those letters. That
//! keeps inversion exact; [`RawEndo`] holds an arbitrary candidate pair
//! `(f, g)` for membership and commutation tests.

use std::fmt;

use num_traits::{One, Zero};

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::poly::{BPoly, Point, Rational, UPoly};

/// One invertible generator, given by its images of `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryMap {
    /// `x ↦ m11 x + m12 y + v1`, `y ↦ m21 x + m22 y + v2`, `det m ≠ 0`.
    Affine {
        matrix: [[Rational; 2]; 2],
        shift: [Rational; 2],
    },
    /// `x ↦ x`, `y ↦ scale * y + p(x)`, `scale ≠ 0`.
    ElemY { p: UPoly, scale: Rational },
    /// `x ↦ scale * x + q(y)`, `y ↦ y`, `scale ≠ 0`.
    ElemX { q: UPoly, scale: Rational },
}

impl ElementaryMap {
    pub fn affine(matrix: [[Rational; 2]; 2], shift: [Rational; 2]) -> Result<Self> {
        let m = ElementaryMap::Affine { matrix, shift };
        m.check()?;
        Ok(m)
    }

    /// `x ↦ x + c`, `y ↦ d y + e`.
    pub fn shift_scale(c: Rational, d: Rational, e: Rational) -> Result<Self> {
        ElementaryMap::affine(
            [[Rational::one(), Rational::zero()], [Rational::zero(), d]],
            [c, e],
        )
    }

    pub fn swap() -> Self {
        ElementaryMap::Affine {
            matrix: [
                [Rational::zero(), Rational::one()],
                [Rational::one(), Rational::zero()],
            ],
            shift: [Rational::zero(), Rational::zero()],
        }
    }

    pub fn elem_y(p: UPoly, scale: Rational) -> Result<Self> {
        let m = ElementaryMap::ElemY { p, scale };
        m.check()?;
        Ok(m)
    }

    pub fn elem_x(q: UPoly, scale: Rational) -> Result<Self> {
        let m = ElementaryMap::ElemX { q, scale };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let (ok, family) = match self {
            ElementaryMap::Affine { matrix, .. } => (!det(matrix).is_zero(), "affine"),
            ElementaryMap::ElemY { scale, .. } => (!scale.is_zero(), "elemY"),
            ElementaryMap::ElemX { scale, .. } => (!scale.is_zero(), "elemX"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter {
                family,
                reason: "generator is not invertible".into(),
            })
        }
    }

    pub fn images(&self) -> (BPoly, BPoly) {
        match self {
            ElementaryMap::Affine { matrix, shift } => {
                let row = |r: &[Rational; 2], v: &Rational| {
                    &(&BPoly::x().scale(&r[0]) + &BPoly::y().scale(&r[1]))
                        + &BPoly::constant(v.clone())
                };
                (row(&matrix[0], &shift[0]), row(&matrix[1], &shift[1]))
            }
            ElementaryMap::ElemY { p, scale } => (
                BPoly::x(),
                &BPoly::y().scale(scale) + &BPoly::from_x(p.clone()),
            ),
            ElementaryMap::ElemX { q, scale } => {
                (&BPoly::x().scale(scale) + &BPoly::from_y(q), BPoly::y())
            }
        }
    }

    pub fn inverse(&self) -> ElementaryMap {
        match self {
            ElementaryMap::Affine { matrix, shift } => {
                let inv_det = det(matrix).recip();
                let [[a, b], [c, d]] = matrix;
                let m = [
                    [d * &inv_det, -(b * &inv_det)],
                    [-(c * &inv_det), a * &inv_det],
                ];
                let v = [
                    -(&m[0][0] * &shift[0] + &m[0][1] * &shift[1]),
                    -(&m[1][0] * &shift[0] + &m[1][1] * &shift[1]),
                ];
                ElementaryMap::Affine {
                    matrix: m,
                    shift: v,
                }
            }
            ElementaryMap::ElemY { p, scale } => {
                let inv = scale.recip();
                ElementaryMap::ElemY {
                    p: -&p.scale(&inv),
                    scale: inv,
                }
            }
            ElementaryMap::ElemX { q, scale } => {
                let inv = scale.recip();
                ElementaryMap::ElemX {
                    q: -&q.scale(&inv),
                    scale: inv,
                }
            }
        }
    }
}

fn det(m: &[[Rational; 2]; 2]) -> Rational {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

impl fmt::Display for ElementaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMap::Affine { matrix, shift } => write!(
                f,
                "affine({},{},{},{}; {},{})",
                matrix[0][0], matrix[0][1], matrix[1][0], matrix[1][1], shift[0], shift[1]
            ),
            ElementaryMap::ElemY { p, scale } => write!(f, "elemY({}; {})", p, scale),
            ElementaryMap::ElemX { q, scale } => {
                write!(f, "elemX({}; {})", q.display_in("y"), scale)
            }
        }
    }
}

/// A word `L1 L2 ... Lk` of generators, read as the ring product
/// `L1 ∘ L2 ∘ ... ∘ Lk`. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Automorphism {
    letters: Vec<ElementaryMap>,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism::default()
    }

    pub fn new(letters: Vec<ElementaryMap>) -> Result<Self> {
        for l in &letters {
            l.check()?;
        }
        Ok(Automorphism { letters })
    }

    pub fn letter(l: ElementaryMap) -> Self {
        Automorphism { letters: vec![l] }
    }

    pub fn letters(&self) -> &[ElementaryMap] {
        &self.letters
    }

    /// Appends a letter on the right.
    pub fn then(mut self, l: ElementaryMap) -> Self {
        self.letters.push(l);
        self
    }

    /// The images `(ρ(x), ρ(y))`.
    pub fn expand(&self) -> RawEndo {
        self.letters.iter().fold(RawEndo::identity(), |acc, l| {
            let (f, g) = l.images();
            acc.compose(&RawEndo::new(f, g))
        })
    }

    pub fn apply(&self, h: &BPoly) -> BPoly {
        self.expand().apply(h)
    }

    /// The ring product `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Automorphism { letters }
    }

    pub fn invert(&self) -> Automorphism {
        Automorphism {
            letters: self
                .letters
                .iter()
                .rev()
                .map(ElementaryMap::inverse)
                .collect(),
        }
    }

    pub fn commutes(&self, d: &Derivation) -> bool {
        self.expand().commutes(d)
    }

    /// `ρ D ρ⁻¹`, computed on the generators.
    pub fn conjugate(&self, d: &Derivation) -> Derivation {
        let inv = self.invert().expand();
        let rho = self.expand();
        Derivation::new(rho.apply(&d.apply(inv.f())), rho.apply(&d.apply(inv.g())))
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A candidate endomorphism given by the images of `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawEndo {
    f: BPoly,
    g: BPoly,
}

impl RawEndo {
    pub fn new(f: BPoly, g: BPoly) -> Self {
        RawEndo { f, g }
    }

    pub fn identity() -> Self {
        RawEndo::new(BPoly::x(), BPoly::y())
    }

    /// `ρ(x)`.
    pub fn f(&self) -> &BPoly {
        &self.f
    }

    /// `ρ(y)`.
    pub fn g(&self) -> &BPoly {
        &self.g
    }

    pub fn is_identity(&self) -> bool {
        self.f == BPoly::x() && self.g == BPoly::y()
    }

    /// `ρ(h) = h(f, g)`.
    pub fn apply(&self, h: &BPoly) -> BPoly {
        h.substitute(&self.f, &self.g)
    }

    /// The ring product `self ∘ other`.
    pub fn compose(&self, other: &RawEndo) -> RawEndo {
        RawEndo::new(self.apply(&other.f), self.apply(&other.g))
    }

    pub fn jacobian_det(&self) -> BPoly {
        &(&self.f.partial_x() * &self.g.partial_y()) - &(&self.f.partial_y() * &self.g.partial_x())
    }

    /// A nonzero constant Jacobian, necessary for invertibility.
    pub fn has_unit_jacobian(&self) -> bool {
        self.jacobian_det()
            .as_constant()
            .is_some_and(|c| !c.is_zero())
    }

    /// `(f(p), g(p)) = p`, i.e. the maximal ideal of `p` is fixed.
    pub fn fixes_point(&self, p: &Point) -> bool {
        self.f.eval(&p.x, &p.y) == p.x && self.g.eval(&p.x, &p.y) == p.y
    }

    /// `D(ρ(z)) - ρ(D(z))` for `z = x` and `z = y`.
    pub fn commutation_residuals(&self, d: &Derivation) -> [BPoly; 2] {
        [
            &d.apply(&self.f) - &self.apply(d.dx()),
            &d.apply(&self.g) - &self.apply(d.dy()),
        ]
    }

    /// `ρ D = D ρ`. Checking the generators suffices: both sides are
    /// `ρ`-twisted derivations, which are determined by their values on `x`, `y`.
    pub fn commutes(&self, d: &Derivation) -> bool {
        self.commutation_residuals(d).iter().all(BPoly::is_zero)
    }
}

impl From<&Automorphism> for RawEndo {
    fn from(a: &Automorphism) -> Self {
        a.expand()
    }
}

impl fmt::Display for RawEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x, y) -> ({}, {})", self.f, self.g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn x() -> BPoly {
        BPoly::x()
    }
    fn y() -> BPoly {
        BPoly::y()
    }

    #[test]
    fn expand_words() {
        assert!(Automorphism::identity().expand().is_identity());
        let ey = ElementaryMap::elem_y(UPoly::x().pow(2), rat(1)).unwrap();
        let one = Automorphism::letter(ey.clone());
        assert_eq!(one.expand(), RawEndo::new(x(), &y() + &x().pow(2)));
        // y ↦ y + x^2 followed by the swap: x ↦ y + x^2, y ↦ x
        let two = one.then(ElementaryMap::swap());
        assert_eq!(two.expand(), RawEndo::new(&y() + &x().pow(2), x()));
    }

    #[test]
    fn apply_shift_scale() {
        let rho = RawEndo::new(&x() + &BPoly::one(), y().scale(&rat(2)));
        assert_eq!(
            rho.apply(&(&x() * &y())),
            (&x() + &BPoly::one()) * y().scale(&rat(2))
        );
    }

    #[test]
    fn inverse_letters() {
        let p = UPoly::from_ints(&[1, 0, 3]);
        let l = ElementaryMap::elem_y(p.clone(), rat(2)).unwrap();
        assert_eq!(
            l.inverse(),
            ElementaryMap::ElemY {
                p: p.scale(&ratio(-1, 2)),
                scale: ratio(1, 2)
            }
        );
        assert_eq!(Automorphism::identity().invert(), Automorphism::identity());
        let a =
            ElementaryMap::affine([[rat(2), rat(1)], [rat(1), rat(1)]], [rat(3), rat(-1)]).unwrap();
        let w = Automorphism::letter(a);
        assert!(w.compose(&w.invert()).expand().is_identity());
        assert!(w.invert().compose(&w).expand().is_identity());
    }

    #[test]
    fn rejects_singular_generators() {
        assert!(ElementaryMap::elem_y(UPoly::x(), rat(0)).is_err());
        assert!(
            ElementaryMap::affine([[rat(1), rat(2)], [rat(2), rat(4)]], [rat(0), rat(0)]).is_err()
        );
    }

    #[test]
    fn jacobians() {
        let g0 = BPoly::from_x(UPoly::from_ints(&[2, -1, 4]));
        assert_eq!(
            RawEndo::new(x(), &g0 + &y().scale(&rat(3))).jacobian_det(),
            BPoly::from_int(3)
        );
        let p = BPoly::from_y(&UPoly::from_ints(&[0, 1, 1]));
        assert_eq!(
            RawEndo::new(&x() + &p, &BPoly::from_int(5) + &y().scale(&rat(-2))).jacobian_det(),
            BPoly::from_int(-2)
        );
        let sq = RawEndo::new(x().pow(2), y());
        assert_eq!(sq.jacobian_det(), x().scale(&rat(2)));
        assert!(!sq.has_unit_jacobian());
    }

    #[test]
    fn commutation() {
        let d = Derivation::new(BPoly::one(), y());
        assert!(RawEndo::identity().commutes(&d));
        let rho = RawEndo::new(x(), &x() + &y());
        assert!(!rho.commutes(&d));
        let [rx, ry] = rho.commutation_residuals(&d);
        assert!(rx.is_zero());
        // D(ρ(y)) - ρ(D(y)) = (1 + y) - (x + y)
        assert_eq!(ry, &BPoly::one() - &x());
    }

    #[test]
    fn conjugation_by_triangular_map() {
        assert_eq!(
            Automorphism::identity().conjugate(&Derivation::partial_x()),
            Derivation::partial_x()
        );
        let b = UPoly::from_ints(&[0, 1, 0, 2]);
        let rho = Automorphism::letter(ElementaryMap::elem_y(b.clone(), rat(1)).unwrap());
        let got = rho.conjugate(&Derivation::partial_x());
        assert_eq!(
            got,
            Derivation::new(BPoly::one(), -BPoly::from_x(b.derivative()))
        );
    }

    #[test]
    fn fixed_points() {
        assert!(RawEndo::identity().fixes_point(&Point::from_ints(4, -7)));
        let t = rat(2);
        let g = &BPoly::from_x(UPoly::from_ints(&[1, 0, 1])).scale(&((&t - rat(1)) / rat(2)))
            + &y().scale(&t);
        assert!(RawEndo::new(x(), g).fixes_point(&Point::from_ints(1, -1)));
        assert!(!RawEndo::new(&x() + &BPoly::one(), y()).fixes_point(&Point::from_ints(0, 0)));
    }
}
