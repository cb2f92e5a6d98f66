//! Exact special values of Dirichlet L-functions, the Riemann zeta function and
//! spectral zeta functions of cycle graphs, computed in cyclotomic fields through
//! Eulerian numbers, with floating-point and Monte-Carlo oracles alongside.

pub mod characters;
pub mod cli;
pub mod coeffs;
pub mod combinatorics;
pub mod error;
pub mod exactnum;
pub mod lvalues;
pub mod numoracle;

pub use error::{Error, Result};
