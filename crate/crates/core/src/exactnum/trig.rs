//! Exact sin, cos and cot at rational multiples of π.
//!
//! For modulus `N` all values live in `Q(ζ_{4N})`: with `ζ = ζ_{4N}` we have
//! `ζ_{2N}^m = ζ^{2m}` and `√−1 = ζ^N`, so
//! `sin(mπ/N) = (ζ^{2m} − ζ^{−2m}) / (2ζ^N)` and `cos(mπ/N) = (ζ^{2m} + ζ^{−2m}) / 2`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::cyclo::{CycNum, CycSum};
use super::rational::{gcd_u64, rat};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    Sin,
    Cos,
    Cot,
}

/// Exact value of `sin`, `cos` or `cot` at `mπ/N`, as an element of `Q(ζ_{4N})`.
pub fn trig_alg(n: u64, m: i64, kind: TrigKind) -> Result<CycNum> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be ≥ 1".into()));
    }
    match kind {
        TrigKind::Sin => Ok(sin_value(n, m)),
        TrigKind::Cos => Ok(cos_value(n, m)),
        TrigKind::Cot => {
            if m.rem_euclid(n as i64) == 0 {
                return Err(Error::PoleAtInteger { n, m });
            }
            Ok(&cos_value(n, m) * &csc(n, m)?)
        }
    }
}

fn sin_value(n: u64, m: i64) -> CycNum {
    let cond = 4 * n;
    let quarter = 3 * n as i64; // ζ^{3N} = 1/√−1
    let mut s = CycSum::new(cond);
    s.add_root(2 * m + quarter, &rat(1, 2));
    s.add_root(-2 * m + quarter, &rat(-1, 2));
    s.finish()
}

fn cos_value(n: u64, m: i64) -> CycNum {
    let mut s = CycSum::new(4 * n);
    s.add_root(2 * m, &rat(1, 2));
    s.add_root(-2 * m, &rat(1, 2));
    s.finish()
}

type CscCache = RwLock<HashMap<(u64, i64), Arc<CycNum>>>;

/// `1/sin(mπ/N)` in `Q(ζ_{4N})`, cached per `(N, m mod 2N)`.
pub fn csc(n: u64, m: i64) -> Result<CycNum> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be ≥ 1".into()));
    }
    if m.rem_euclid(n as i64) == 0 {
        return Err(Error::PoleAtInteger { n, m });
    }
    static CACHE: OnceLock<CscCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, m.rem_euclid(2 * n as i64));
    if let Some(v) = cache.read().unwrap().get(&key) {
        return Ok(v.as_ref().clone());
    }
    let value = csc_value(n, key.1);
    cache.write().unwrap().insert(key, Arc::new(value.clone()));
    Ok(value)
}

/// `csc x = 2√−1·e^{ix}/(w − 1)` with `w = e^{2ix}` of order `d`, and
/// `1/(w − 1) = (1/d) Σ_{j<d} j·w^j`.
fn csc_value(n: u64, m: i64) -> CycNum {
    let d = n / gcd_u64(n, m.unsigned_abs());
    let mut s = CycSum::new(4 * n);
    for j in 1..d as i64 {
        s.add_root(n as i64 + 2 * m + 4 * m * j, &rat(2 * j, d as i64));
    }
    s.finish()
}
