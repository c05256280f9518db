//! Exact computations with derivations of the plane polynomial ring `Q[x, y]`.
//!
//! * [`poly`]: rational polynomials in one and two variables, resultants,
//!   gcds, factorization and simple number fields.
//! * [`derivation`]: derivations `a ∂x + b ∂y`, the simplicity test for
//!   `∂x + (a(x) y + b(x)) ∂y`, stable principal ideals and singular points.
//! * [`automorphism`]: plane polynomial automorphisms as words in affine and
//!   triangular generators; composition, inversion, conjugation of
//!   derivations and commutation tests.
//! * [`isotropy`]: the group of automorphisms commuting with a derivation of
//!   the form above, with parameter sampling, membership and group laws.
//! * [`series`]: truncated formal power-series solutions through a point.

pub mod automorphism;
pub mod derivation;
pub mod error;
pub mod isotropy;
mod linalg;
pub mod poly;
pub mod series;

pub use automorphism::{Automorphism, ElementaryMap, RawEndo};
pub use isotropy::{FamilyParams, GroupLaw, IsotropyDescription};
pub use series::{SolutionPair, TruncatedSeries};

pub use derivation::{Derivation, OdeSolution, ShamsuddinDerivation, SingularCertificate};
pub use error::{Error, Result};

pub use poly::{rat, ratio, BPoly, Point, Rational, UPoly};
