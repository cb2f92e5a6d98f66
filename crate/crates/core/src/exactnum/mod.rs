//! Exact arithmetic: rationals, polynomials and truncated series over `Q`, and
//! cyclotomic fields with a numeric embedding.

pub mod cyclo;
pub mod poly;
pub mod rational;
pub mod series;
pub mod trig;

pub use cyclo::{cyclotomic_polynomial, CycNum, CycSum};
pub use poly::PolyQ;
pub use rational::Rational;
pub use series::SeriesQ;
pub use trig::{csc, trig_alg, TrigKind};

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
    /// Inverse of the first operand; the second is ignored.
    Inv,
    /// Promote the first operand to the conductor of the second.
    Promote,
}

/// Field operation dispatch over [`CycNum`].
pub fn cyc_field_ops(a: &CycNum, b: &CycNum, op: CycOp) -> Result<CycNum> {
    match op {
        CycOp::Add => Ok(a + b),
        CycOp::Mul => Ok(a * b),
        CycOp::Inv => a.inv(),
        CycOp::Promote => a.promote(b.conductor()),
    }
}

pub fn cyc_to_complex(z: &CycNum) -> Complex64 {
    z.to_complex()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Mul,
    /// Reciprocal of the first operand.
    Reciprocal,
    /// First operand raised to the given integer power.
    Pow(i64),
}

/// Truncated Laurent arithmetic dispatch over [`SeriesQ`].
pub fn series_ops(a: &SeriesQ, b: Option<&SeriesQ>, op: SeriesOp) -> Result<SeriesQ> {
    match op {
        SeriesOp::Mul => {
            let b = b.ok_or_else(|| Error::InvalidArgument("mul needs two series".into()))?;
            Ok(a * b)
        }
        SeriesOp::Reciprocal => a.reciprocal(),
        SeriesOp::Pow(e) => a.pow(e),
    }
}
