//! Derivations `D = a ∂x + b ∂y` of `Q[x, y]`.
//!
//! A derivation is determined by the pair `(D(x), D(y))`. The special family
//! `∂x + (a(x) y + b(x)) ∂y` gets its own type, [`ShamsuddinDerivation`],
//! since its simplicity is decided by whether `h' = a h + b` has a polynomial
//! solution `h`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{resultant_y, BPoly, NumberField, NumberFieldElem, Point, Rational, UPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    dx: BPoly,
    dy: BPoly,
}

impl Derivation {
    /// The derivation with `D(x) = dx` and `D(y) = dy`.
    pub fn new(dx: BPoly, dy: BPoly) -> Self {
        Derivation { dx, dy }
    }

    pub fn partial_x() -> Self {
        Derivation::new(BPoly::one(), BPoly::zero())
    }

    pub fn partial_y() -> Self {
        Derivation::new(BPoly::zero(), BPoly::one())
    }

    /// `D(x)`, the coefficient of `∂x`.
    pub fn dx(&self) -> &BPoly {
        &self.dx
    }

    /// `D(y)`, the coefficient of `∂y`.
    pub fn dy(&self) -> &BPoly {
        &self.dy
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// `D(f) = D(x) ∂f/∂x + D(y) ∂f/∂y`.
    pub fn apply(&self, f: &BPoly) -> BPoly {
        &(&self.dx * &f.partial_x()) + &(&self.dy * &f.partial_y())
    }

    /// Cofactor `k` with `D(f) = k f` when the principal ideal `(f)` is stable.
    pub fn stable_cofactor(&self, f: &BPoly) -> Result<Option<BPoly>> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        BPoly::divides(f, &self.apply(f))
    }

    /// Whether `D` maps the ideal `(f)` into itself.
    pub fn stabilizes_ideal(&self, f: &BPoly) -> Result<bool> {
        Ok(self.stable_cofactor(f)?.is_some())
    }

    /// Both coefficients vanish at `p`.
    pub fn is_singular_at(&self, p: &Point) -> bool {
        self.dx.eval(&p.x, &p.y).is_zero() && self.dy.eval(&p.x, &p.y).is_zero()
    }

    /// Decides whether `D(x)` and `D(y)` have a common zero anywhere over the
    /// algebraic closure.
    ///
    /// A shared factor of positive degree is reported as such. Otherwise the
    /// common zeros are finite, their `x`-coordinates are roots of the
    /// resultant in `y`, and each irreducible factor `q` of that resultant is
    /// tested by a gcd over `Q[t]/(q)`.
    pub fn certify_no_singular_points(&self) -> Result<SingularCertificate> {
        if self.is_zero() {
            return Err(Error::ZeroDerivation);
        }
        let common = self.dx.gcd(&self.dy);
        if !common.is_constant() {
            return Ok(SingularCertificate::CommonFactor(common));
        }
        if self.dx.is_zero() || self.dy.is_zero() {
            // the other coefficient is a nonzero constant
            return Ok(SingularCertificate::NoSingularPoints);
        }
        if self.dx.degree_y() == Some(0) && self.dy.degree_y() == Some(0) {
            let swapped = Derivation::new(self.dx.swap_xy(), self.dy.swap_xy());
            return match swapped.certify_no_singular_points()? {
                SingularCertificate::SingularPointFound(w) => {
                    Ok(SingularCertificate::SingularPointFound(w.swapped()))
                }
                other => Ok(other),
            };
        }
        let res = resultant_y(&self.dx, &self.dy);
        if res.is_constant() {
            return Ok(SingularCertificate::NoSingularPoints);
        }
        for (q, _) in res.squarefree_part().factor().factors {
            let field = NumberField::new(&q).expect("irreducible factor");
            let a = crate::poly::specialize(&field, &self.dx);
            let b = crate::poly::specialize(&field, &self.dy);
            let g = field.poly_gcd(&a, &b);
            if g.len() >= 2 {
                return Ok(SingularCertificate::SingularPointFound(
                    SingularWitness::new(q, g),
                ));
            }
        }
        Ok(SingularCertificate::NoSingularPoints)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*dx + ({})*dy", self.dx, self.dy)
    }
}

/// Outcome of [`Derivation::certify_no_singular_points`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularCertificate {
    NoSingularPoints,
    SingularPointFound(SingularWitness),
    /// A common factor; every zero of it is a singular point.
    CommonFactor(BPoly),
}

/// A common zero `(x0, y0)`: `x0` is a root of `x_min_poly`, and `y0` a root
/// of `y_factor` whose coefficients lie in `Q[t]/(x_min_poly)` with `t = x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWitness {
    pub x_min_poly: UPoly,
    pub y_factor: Vec<NumberFieldElem>,
    /// Set when both coordinates are rational.
    pub point: Option<Point>,
    /// True when the roles of `x` and `y` were exchanged.
    pub swapped: bool,
}

impl SingularWitness {
    fn new(x_min_poly: UPoly, y_factor: Vec<NumberFieldElem>) -> Self {
        let point = (x_min_poly.degree() == Some(1) && y_factor.len() == 2)
            .then(|| {
                let x0 = -x_min_poly.coeff(0) / x_min_poly.coeff(1);
                let y0 = -y_factor[0].as_rational()? / y_factor[1].as_rational()?;
                Some(Point::new(x0, y0))
            })
            .flatten();
        SingularWitness {
            x_min_poly,
            y_factor,
            point,
            swapped: false,
        }
    }

    fn swapped(mut self) -> Self {
        self.swapped = !self.swapped;
        self.point = self.point.map(|p| Point::new(p.y, p.x));
        self
    }
}

impl fmt::Display for SingularWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v) = if self.swapped { ("y", "x") } else { ("x", "y") };
        if let Some(p) = &self.point {
            return write!(f, "point {}", p);
        }
        write!(
            f,
            "{} = t with {} = 0; {} a root of ",
            u,
            self.x_min_poly.display_in("t"),
            v
        )?;
        let terms: Vec<String> = self
            .y_factor
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({})", c),
                1 => format!("({})*{}", c, v),
                _ => format!("({})*{}^{}", c, v, k),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `∂x + (a(x) y + b(x)) ∂y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShamsuddinDerivation {
    a: UPoly,
    b: UPoly,
}

impl ShamsuddinDerivation {
    pub fn new(a: UPoly, b: UPoly) -> Self {
        ShamsuddinDerivation { a, b }
    }

    pub fn a(&self) -> &UPoly {
        &self.a
    }

    pub fn b(&self) -> &UPoly {
        &self.b
    }

    pub fn to_derivation(&self) -> Derivation {
        let dy = &BPoly::from_x(self.a.clone()) * &BPoly::y() + BPoly::from_x(self.b.clone());
        Derivation::new(BPoly::one(), dy)
    }

    pub fn solve_ode(&self) -> OdeSolution {
        solve_sham_ode(&self.a, &self.b)
    }

    pub fn is_simple(&self) -> bool {
        is_simple_shamsuddin(&self.a, &self.b)
    }
}

impl From<&ShamsuddinDerivation> for Derivation {
    fn from(d: &ShamsuddinDerivation) -> Self {
        d.to_derivation()
    }
}

/// Polynomial solutions of `h' = a h + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OdeSolution {
    /// The only solution (`a ≠ 0`).
    Unique(UPoly),
    /// `a = 0`: `base + k` for every constant `k`.
    Family(UPoly),
    NoSolution,
}

impl OdeSolution {
    pub fn solution(&self) -> Option<&UPoly> {
        match self {
            OdeSolution::Unique(h) | OdeSolution::Family(h) => Some(h),
            OdeSolution::NoSolution => None,
        }
    }
}

/// The only possible solution of `h' = a h + b` for `a ≠ 0`, obtained by
/// matching coefficients from the top degree down; `None` when `deg b < deg a`
/// (and `b ≠ 0`) or `a = 0`. The candidate still has to be checked against
/// the low-degree equations, see [`ode_residual`].
pub fn forced_candidate(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let m = a.degree()?;
    let Some(db) = b.degree() else {
        return Some(UPoly::zero());
    };
    let n = db.checked_sub(m)?;
    let lead_inv = a.lead().expect("nonzero").recip();
    let mut h = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        // coefficient of x^(k+m) in h' - a h - b, solved for h_k
        let mut acc = -b.coeff(k + m);
        if k + m < n {
            acc += &h[k + m + 1] * Rational::from_integer((k + m + 1).into());
        }
        for i in 0..m {
            let idx = k + m - i;
            if idx <= n {
                acc -= a.coeff(i) * &h[idx];
            }
        }
        h[k] = acc * &lead_inv;
    }
    Some(UPoly::new(h))
}

/// `h' - a h - b`.
pub fn ode_residual(a: &UPoly, b: &UPoly, h: &UPoly) -> UPoly {
    &(&h.derivative() - &(a * h)) - b
}

pub fn solve_sham_ode(a: &UPoly, b: &UPoly) -> OdeSolution {
    if a.is_zero() {
        return OdeSolution::Family(b.antiderivative());
    }
    match forced_candidate(a, b) {
        Some(h) if ode_residual(a, b, &h).is_zero() => OdeSolution::Unique(h),
        _ => OdeSolution::NoSolution,
    }
}

/// Simplicity of `∂x + (a y + b) ∂y`: never for `a = 0`, otherwise exactly
/// when `h' = a h + b` has no polynomial solution.
pub fn is_simple_shamsuddin(a: &UPoly, b: &UPoly) -> bool {
    !a.is_zero() && solve_sham_ode(a, b) == OdeSolution::NoSolution
}

/// Nonconstant probe polynomials of total degree at most `max_degree`: every
/// monomial, and every sum or difference of two distinct monomials (the
/// constant 1 included).
pub fn probe_polynomials(max_degree: usize) -> Vec<BPoly> {
    let monos: Vec<BPoly> = (0..=max_degree)
        .flat_map(|t| (0..=t).map(move |i| BPoly::monomial(Rational::one(), i, t - i)))
        .collect();
    let mut out: Vec<BPoly> = monos.iter().filter(|m| !m.is_constant()).cloned().collect();
    for (i, m1) in monos.iter().enumerate() {
        for m2 in &monos[i + 1..] {
            out.push(m1 + m2);
            out.push(m1 - m2);
        }
    }
    out
}
