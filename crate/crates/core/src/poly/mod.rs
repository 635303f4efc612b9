//! Exact multivariate polynomial arithmetic over arbitrary-precision
//! rationals: monomial orders, division, gcd, squarefree parts, evaluation.

mod coeff;
mod gcd;
mod monomial;
mod order;
mod polynomial;
mod variable;

pub use coeff::Coeff;
pub use gcd::{poly_gcd, squarefree_part};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{PolyError, Polynomial};
pub use variable::{VarPool, VarRole, Variable};
