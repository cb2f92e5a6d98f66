//! The coefficient families `c_{n,s}`, `a_{n,i}` and `b_{n,i}` and the matrix
//! identity `A·C = diag(1!, 3!, …, (2n−1)!)`.
//!
//! * `c_{n,s}` is the coefficient of `x^{−2s}` in the Laurent expansion of
//!   `sin^{−2n} x`, so `csc^{2n} x = Σ_{s=1}^{n} c_{n,s} Σ_k (x + kπ)^{−2s}`.
//! * `a_{n,i}` comes from circular Eulerian numbers through the first-kind
//!   Chebyshev table, `b_{n,i}` through the second-kind table, and `b_{n,i} = i·a_{n,i}`.
//!
//! Rows are cached; every function returns a shared immutable row.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::combinatorics::{abar, chebyshev_coeff, ChebyshevKind};
use crate::error::{Error, Result};
use crate::exactnum::rational::{factorial_q, int, sign_pow, Rational};
use crate::exactnum::series::sin_series;
use crate::exactnum::SeriesQ;

type RowCache = OnceLock<RwLock<HashMap<u32, Arc<Vec<Rational>>>>>;

fn cached(
    cache: &'static RowCache,
    n: u32,
    build: impl FnOnce() -> Result<Vec<Rational>>,
) -> Result<Arc<Vec<Rational>>> {
    let map = cache.get_or_init(Default::default);
    if let Some(row) = map.read().unwrap().get(&n) {
        return Ok(row.clone());
    }
    let row = Arc::new(build()?);
    map.write().unwrap().insert(n, row.clone());
    Ok(row)
}

fn require_positive(n: u32, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} needs n ≥ 1")));
    }
    Ok(())
}

/// `(c_{n,0}, …, c_{n,n})`, read off `(x / sin x)^{2n}` to order `x^{2n}`.
pub fn laurent_c(n: u32) -> Result<Arc<Vec<Rational>>> {
    require_positive(n, "laurent_c")?;
    static CACHE: RowCache = OnceLock::new();
    cached(&CACHE, n, || {
        let order = 2 * n as i64 + 1;
        let sin = sin_series(order + 1);
        let sinc_coeffs = (1..=order).map(|k| sin.coeff(k).unwrap()).collect();
        let sinc = SeriesQ::new(0, sinc_coeffs, order);
        let power = sinc.pow(-(2 * n as i64))?;
        Ok((0..=n as i64)
            .map(|s| power.coeff(2 * n as i64 - 2 * s).unwrap())
            .collect())
    })
}

/// `(a_{n,1}, …, a_{n,n})` with `a_{n,i} = 2 Σ_{l=1}^{i} (−1)^{n−l} t(n−l, n−i) Ā(2n, l)`.
pub fn coeff_a(n: u32) -> Result<Arc<Vec<Rational>>> {
    require_positive(n, "coeff_a")?;
    static CACHE: RowCache = OnceLock::new();
    cached(&CACHE, n, || {
        Ok((1..=n as i64)
            .map(|i| {
                let sum: Rational = (1..=i)
                    .map(|l| {
                        let t =
                            chebyshev_coeff((n as i64 - l) as u32, n as i64 - i, ChebyshevKind::T);
                        t * abar(2 * n, l) * int(sign_pow(n as i64 - l))
                    })
                    .sum();
                sum * int(2)
            })
            .collect())
    })
}

/// `b_{n,i} = Σ_{l=1}^{i} (−1)^{n−l} u(n−l, n−i) Ā(2n+1, l)`, checked against `i·a_{n,i}`.
pub fn coeff_b(n: u32) -> Result<Arc<Vec<Rational>>> {
    require_positive(n, "coeff_b")?;
    static CACHE: RowCache = OnceLock::new();
    cached(&CACHE, n, || {
        let a = coeff_a(n)?;
        (1..=n as i64)
            .map(|i| {
                let via_u: Rational = (1..=i)
                    .map(|l| {
                        let u =
                            chebyshev_coeff((n as i64 - l) as u32, n as i64 - i, ChebyshevKind::U);
                        u * abar(2 * n + 1, l) * int(sign_pow(n as i64 - l))
                    })
                    .sum();
                let via_a = &a[i as usize - 1] * int(i);
                if via_u != via_a {
                    return Err(Error::InternalIdentityViolation(format!(
                        "b[{n},{i}]: u-sum gives {via_u}, i·a gives {via_a}"
                    )));
                }
                Ok(via_u)
            })
            .collect()
    })
}

/// One component `(A·C)_{n,s}` of the matrix identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub n: u32,
    pub s: u32,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// Checks `Σ_{j=s}^{n} a_{n,j} c_{j,s} = δ_{s,n}·(2n−1)!` for `1 ≤ s ≤ n`.
pub fn verify_ac_identity(n: u32) -> Result<IdentityReport> {
    require_positive(n, "verify_ac_identity")?;
    let a = coeff_a(n)?;
    let c_rows: Vec<_> = (1..=n).map(laurent_c).collect::<Result<_>>()?;
    let checks = (1..=n)
        .map(|s| {
            let lhs: Rational = (s..=n)
                .map(|j| &a[j as usize - 1] * &c_rows[j as usize - 1][s as usize])
                .sum();
            let rhs = if s == n {
                factorial_q(2 * n as u64 - 1)
            } else {
                Rational::zero()
            };
            IdentityCheck { n, s, lhs, rhs }
        })
        .collect();
    Ok(IdentityReport { checks })
}

/// Row `n` of `diag(1!, 3!, …, (2n−1)!)·C⁻¹`, by triangular substitution against the unit-diagonal `C`.
pub fn coeff_a_via_inverse(n: u32) -> Result<Vec<Rational>> {
    require_positive(n, "coeff_a_via_inverse")?;
    let c_rows: Vec<_> = (1..=n).map(laurent_c).collect::<Result<_>>()?;
    let mut x = vec![Rational::zero(); n as usize];
    x[n as usize - 1] = factorial_q(2 * n as u64 - 1);
    for s in (1..n).rev() {
        let acc: Rational = (s + 1..=n)
            .map(|j| &x[j as usize - 1] * &c_rows[j as usize - 1][s as usize])
            .sum();
        x[s as usize - 1] = -acc;
    }
    Ok(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffFamily {
    A,
    B,
    C,
}

/// Dense lower-triangular `n×n` matrix of one family; entry `(k, i)` sits at `entries[k−1][i−1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub n: u32,
    pub family: CoeffFamily,
    pub entries: Vec<Vec<Rational>>,
}

impl CoeffMatrix {
    pub fn build(n: u32, family: CoeffFamily) -> Result<Self> {
        require_positive(n, "CoeffMatrix")?;
        let entries = (1..=n)
            .map(|k| {
                let row: Vec<Rational> = match family {
                    CoeffFamily::A => coeff_a(k)?.as_ref().clone(),
                    CoeffFamily::B => coeff_b(k)?.as_ref().clone(),
                    CoeffFamily::C => laurent_c(k)?[1..].to_vec(),
                };
                let mut padded = row;
                padded.resize(n as usize, Rational::zero());
                Ok(padded)
            })
            .collect::<Result<_>>()?;
        Ok(CoeffMatrix { n, family, entries })
    }

    pub fn get(&self, k: u32, i: u32) -> &Rational {
        &self.entries[k as usize - 1][i as usize - 1]
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, row)| row.iter().skip(k + 1).all(Zero::is_zero))
    }

    /// The expected diagonal entry of row `k`.
    pub fn expected_diagonal(&self, k: u32) -> Rational {
        let odd_factorial = factorial_q(2 * k as u64 - 1);
        match self.family {
            CoeffFamily::A => odd_factorial,
            CoeffFamily::B => odd_factorial * int(k as i64),
            CoeffFamily::C => Rational::one(),
        }
    }

    pub fn product(&self, rhs: &CoeffMatrix) -> Vec<Vec<Rational>> {
        let n = self.n.min(rhs.n) as usize;
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|s| {
                        (0..n)
                            .map(|j| &self.entries[k][j] * &rhs.entries[j][s])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }
}
