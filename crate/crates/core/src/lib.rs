//! Automated theorem proving for Euclidean plane geometry.
//!
//! Constructions built from dynamic-geometry tools are translated into
//! polynomial hypothesis systems over the rationals; statements are decided
//! by denying the thesis (Rabinowitsch trick) and eliminating the dependent
//! variables with a Groebner basis under a block order. A proper, nonzero
//! elimination ideal in the free coordinates yields a "generally true"
//! verdict together with recognized non-degeneracy conditions.

pub mod dsl;
pub mod geomodel;
pub mod groebner;
pub mod poly;
pub mod prover;
pub mod translate;

pub use poly::{Coeff, Monomial, MonomialOrder, PolyError, Polynomial, VarPool, VarRole, Variable};

/// Exact rational scalar used throughout the prover pipeline.
pub type Rat = num_rational::BigRational;

/// Polynomial with exact rational coefficients, the currency of hypotheses
/// and theses.
pub type QPoly = Polynomial<Rat>;

/// Floating-point polynomial, used only by the numeric consistency oracle.
pub type FPoly = Polynomial<f64>;

/// Convenience constructor for exact rational constants.
pub fn rat(n: i64, d: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rint(n: i64) -> Rat {
    rat(n, 1)
}
