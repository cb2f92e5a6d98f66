//! Truncated Laurent series with rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// `Σ_{k=valuation}^{order-1} c_k x^k + O(x^order)`.
///
/// `coeffs[i]` is the coefficient of `x^(valuation + i)`. Nothing is known about
/// exponents at or beyond `order`. A nonzero series has a nonzero first coefficient;
/// a series that is zero to its known precision has `valuation == order` and no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl SeriesQ {
    /// Builds `Σ coeffs[i] x^(start+i) + O(x^order)`; terms at or beyond `order` are dropped.
    pub fn new(start: i64, coeffs: Vec<Rational>, order: i64) -> Self {
        let mut coeffs = coeffs;
        let known = (order - start).max(0) as usize;
        coeffs.truncate(known);
        coeffs.resize(known, Rational::zero());
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => SeriesQ {
                valuation: start + k as i64,
                coeffs: coeffs.split_off(k),
                order,
            },
            None => SeriesQ {
                valuation: order,
                coeffs: Vec::new(),
                order,
            },
        }
    }

    /// Power series `Σ_{k<order} f(k) x^k + O(x^order)`.
    pub fn from_fn(order: i64, f: impl Fn(u64) -> Rational) -> Self {
        let coeffs = (0..order.max(0) as u64).map(f).collect();
        Self::new(0, coeffs, order)
    }

    pub fn monomial(c: Rational, exponent: i64, order: i64) -> Self {
        Self::new(exponent, vec![c], order)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k`; `None` when `k` is at or beyond the truncation order.
    pub fn coeff(&self, k: i64) -> Option<Rational> {
        if k >= self.order {
            return None;
        }
        if k < self.valuation {
            return Some(Rational::zero());
        }
        Some(self.coeffs[(k - self.valuation) as usize].clone())
    }

    /// Multiplicative inverse; precision relative to the valuation is preserved.
    pub fn reciprocal(&self) -> Result<SeriesQ> {
        let lead = self.coeffs.first().ok_or(Error::ZeroLeadingCoefficient)?;
        let precision = self.coeffs.len();
        let lead_inv = lead.recip();
        let mut inv: Vec<Rational> = Vec::with_capacity(precision);
        inv.push(lead_inv.clone());
        for k in 1..precision {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &inv[k - j];
                }
            }
            inv.push(-acc * &lead_inv);
        }
        let start = -self.valuation;
        Ok(SeriesQ::new(start, inv, start + precision as i64))
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn pow(&self, e: i64) -> Result<SeriesQ> {
        if e < 0 {
            return self.reciprocal()?.pow(-e);
        }
        if e == 0 {
            let precision = self.order - self.valuation;
            return Ok(SeriesQ::monomial(Rational::one(), 0, precision));
        }
        let mut result: Option<SeriesQ> = None;
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    Some(r) => &r * &base,
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result.expect("positive exponent"))
    }
}

impl Mul for &SeriesQ {
    type Output = SeriesQ;
    fn mul(self, rhs: &SeriesQ) -> SeriesQ {
        let order = self
            .order
            .saturating_add(rhs.valuation)
            .min(rhs.order.saturating_add(self.valuation));
        let start = self.valuation + rhs.valuation;
        let len = (order - start).max(0) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        SeriesQ::new(start, out, order)
    }
}

fn combine(a: &SeriesQ, b: &SeriesQ, f: impl Fn(Rational, Rational) -> Rational) -> SeriesQ {
    let order = a.order.min(b.order);
    let start = a.valuation.min(b.valuation).min(order);
    let coeffs = (start..order)
        .map(|k| f(a.coeff(k).unwrap(), b.coeff(k).unwrap()))
        .collect();
    SeriesQ::new(start, coeffs, order)
}

impl Add for &SeriesQ {
    type Output = SeriesQ;
    fn add(self, rhs: &SeriesQ) -> SeriesQ {
        combine(self, rhs, |a, b| a + b)
    }
}

impl Sub for &SeriesQ {
    type Output = SeriesQ;
    fn sub(self, rhs: &SeriesQ) -> SeriesQ {
        combine(self, rhs, |a, b| a - b)
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;
    fn neg(self) -> SeriesQ {
        SeriesQ {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

/// `sin x + O(x^order)`.
pub fn sin_series(order: i64) -> SeriesQ {
    SeriesQ::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::zero()
        } else {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Rational::new(sign.into(), super::rational::factorial(k))
        }
    })
}

/// `cos x + O(x^order)`.
pub fn cos_series(order: i64) -> SeriesQ {
    SeriesQ::from_fn(order, |k| {
        if k % 2 == 1 {
            Rational::zero()
        } else {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Rational::new(sign.into(), super::rational::factorial(k))
        }
    })
}
