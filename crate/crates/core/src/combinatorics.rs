//! Eulerian and circular Eulerian numbers, Bernoulli and secant numbers,
//! Chebyshev coefficient tables, and the brute-force permutation oracle.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::rational::{
    binomial, factorial, from_bigint, from_biguint, int, pow2, rat, sign_pow, Rational,
};
use crate::exactnum::series::cos_series;
use crate::exactnum::PolyQ;

/// Largest `n` accepted by [`circular_eulerian_bruteforce`].
pub const BRUTEFORCE_MAX_N: u32 = 10;

/// Eulerian number `A(n, l)`: permutations of `1..=n` with exactly `l − 1` descents.
///
/// Evaluated by the alternating sum `Σ_{i=0}^{l} (−1)^i C(n+1, i) (l−i)^n`.
pub fn eulerian(n: u32, l: i64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("eulerian needs n ≥ 1".into()));
    }
    if l <= 0 || l > n as i64 {
        return Ok(BigUint::zero());
    }
    let mut acc = BigInt::zero();
    for i in 0..=l {
        let term = binomial(n as i64 + 1, i) * BigInt::from(l - i).pow(n);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc.to_biguint().expect("Eulerian numbers are non-negative"))
}

/// Circular Eulerian number `Ā(n, l) = A(n − 1, l)`: circular `n`-permutations with `l` descents.
pub fn circular_eulerian(n: u32, l: i64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "circular_eulerian needs n ≥ 2".into(),
        ));
    }
    eulerian(n - 1, l)
}

/// `Ā(n, l)` as a rational, for use inside exact formulas.
pub(crate) fn abar(n: u32, l: i64) -> Rational {
    from_biguint(&circular_eulerian(n, l).expect("n ≥ 2"))
}

/// A circular arrangement `σ(1..n)` of `1..=n` with `σ(n+1) = σ(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularPermutation {
    arrangement: Vec<u32>,
}

impl CircularPermutation {
    pub fn new(arrangement: Vec<u32>) -> Result<Self> {
        let n = arrangement.len();
        let mut seen = vec![false; n + 1];
        for &v in &arrangement {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 1..={n}: {arrangement:?}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(CircularPermutation { arrangement })
    }

    pub fn len(&self) -> usize {
        self.arrangement.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrangement.is_empty()
    }

    pub fn arrangement(&self) -> &[u32] {
        &self.arrangement
    }

    fn circular_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let n = self.arrangement.len();
        (0..n).map(move |i| (self.arrangement[i], self.arrangement[(i + 1) % n]))
    }

    pub fn descents(&self) -> usize {
        self.circular_pairs().filter(|(a, b)| a > b).count()
    }

    pub fn ascents(&self) -> usize {
        self.circular_pairs().filter(|(a, b)| a < b).count()
    }

    /// `m(σ) = #descents − #ascents`.
    pub fn descent_excess(&self) -> i64 {
        self.descents() as i64 - self.ascents() as i64
    }

    /// `R(σ) = (σ(n), …, σ(1))`.
    pub fn reversal(&self) -> CircularPermutation {
        let mut arrangement = self.arrangement.clone();
        arrangement.reverse();
        CircularPermutation { arrangement }
    }
}

/// Lexicographic successor in place; `false` once the last permutation is reached.
fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All `(n−1)!` circular `n`-permutations, each written with `σ(1) = n`.
pub fn circular_permutations(n: u32) -> Result<Vec<CircularPermutation>> {
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::InstanceTooLarge(format!(
            "enumerating circular {n}-permutations (limit {BRUTEFORCE_MAX_N})"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rest: Vec<u32> = (1..n).collect();
    let mut out = Vec::new();
    loop {
        let mut arrangement = Vec::with_capacity(n as usize);
        arrangement.push(n);
        arrangement.extend_from_slice(&rest);
        out.push(CircularPermutation { arrangement });
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(out)
}

/// Counts circular `n`-permutations with exactly `l` circular descents by enumeration.
pub fn circular_eulerian_bruteforce(n: u32, l: i64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "circular permutations need n ≥ 2".into(),
        ));
    }
    let count = circular_permutations(n)?
        .iter()
        .filter(|s| s.descents() as i64 == l)
        .count();
    Ok(BigUint::from(count))
}

/// Table of `A(n, ·)` or `Ā(n, ·)` over the range where the values can be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTable {
    pub n: u32,
    pub circular: bool,
    pub values: BTreeMap<i64, BigUint>,
}

impl EulerianTable {
    pub fn build(n: u32, circular: bool) -> Result<Self> {
        let values = if circular {
            (1..n as i64)
                .map(|l| circular_eulerian(n, l).map(|v| (l, v)))
                .collect::<Result<_>>()?
        } else {
            (1..=n as i64)
                .map(|l| eulerian(n, l).map(|v| (l, v)))
                .collect::<Result<_>>()?
        };
        Ok(EulerianTable {
            n,
            circular,
            values,
        })
    }

    pub fn total(&self) -> BigUint {
        self.values.values().sum()
    }
}

/// Class number `M_m`: circular `n`-permutations with `#descents − #ascents = m`.
pub fn class_number_m(n: u32, m: i64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidArgument("class numbers need n ≥ 2".into()));
    }
    let n_i = n as i64;
    if (n_i - m).rem_euclid(2) != 0 || m.abs() > n_i - 2 {
        return Ok(BigUint::zero());
    }
    circular_eulerian(n, (n_i - m) / 2)
}

/// `B_0, …, B_{k_max}` from `Σ_{j=0}^{k} C(k+1, j) B_j = 0` (so `B_1 = −1/2`).
pub fn bernoulli_numbers(k_max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(k_max + 1);
    b.push(Rational::one());
    for k in 1..=k_max {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += from_bigint(binomial(k as i64 + 1, j as i64)) * bj;
            }
        }
        b.push(-acc / int(k as i64 + 1));
    }
    b
}

/// `𝐁_n(x) = Σ_j C(n, j) B_j x^{n−j}`.
pub fn bernoulli_polynomial(n: usize) -> PolyQ {
    let b = bernoulli_numbers(n);
    let coeffs = (0..=n)
        .map(|deg| from_bigint(binomial(n as i64, (n - deg) as i64)) * &b[n - deg])
        .collect();
    PolyQ::from_coeffs(coeffs)
}

/// Secant numbers indexed `0..=2·k_max` (odd slots are zero): `sec t = Σ E_{2n} t^{2n}/(2n)!`.
///
/// The numbers are the positive ones, `1, 1, 5, 61, …`, read off the exact reciprocal
/// of the cosine series.
pub fn secant_numbers(k_max: usize) -> Vec<BigInt> {
    let order = 2 * k_max as i64 + 1;
    let sec = cos_series(order)
        .reciprocal()
        .expect("cos series has unit constant term");
    (0..order)
        .map(|k| {
            let c =
                sec.coeff(k).expect("within truncation order") * from_bigint(factorial(k as u64));
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    /// First kind, coefficients `t(k, i)` of `T_{2k}`.
    T,
    /// Second kind, coefficients `u(k, i)` of `U_{2k}`.
    U,
}

/// Coefficient of `x^{2i}` in `T_{2k}` or `U_{2k}`.
///
/// `t(0, 0)` is `1/2`, not the textbook `1`; this halving accounts for the middle
/// term when the cosine sum is folded in the `a_{n,i}` formula.
pub fn chebyshev_coeff(k: u32, i: i64, kind: ChebyshevKind) -> Rational {
    if i < 0 || i > k as i64 {
        return Rational::zero();
    }
    let (k_i, i_u) = (k as i64, i as u32);
    let base = from_bigint(binomial(k_i + i, k_i - i) * pow2(2 * i_u)) * int(sign_pow(k_i - i));
    match kind {
        ChebyshevKind::U => base,
        ChebyshevKind::T if k == 0 => rat(1, 2),
        ChebyshevKind::T => base * rat(k_i, k_i + i),
    }
}

/// `cos(jπ/2)` for integer `j`: `1, 0, −1, 0` by `j mod 4`.
fn cos_quarter(j: i64) -> i64 {
    match j.rem_euclid(4) {
        0 => 1,
        2 => -1,
        _ => 0,
    }
}

/// `√2·cos((2j+1)π/4)` for integer `j`: `1, −1, −1, 1` by `j mod 4`.
fn sqrt2_cos_odd_eighth(j: i64) -> i64 {
    match j.rem_euclid(4) {
        0 | 3 => 1,
        _ => -1,
    }
}

/// `B_{2n}` from circular Eulerian numbers.
pub fn bernoulli_via_eulerian(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "bernoulli_via_eulerian needs n ≥ 1".into(),
        ));
    }
    let n_i = n as i64;
    let sum: Rational = (1..2 * n_i)
        .map(|l| abar(2 * n, l) * int(cos_quarter(n_i - l)))
        .sum();
    let denom = from_bigint(pow2(3 * n - 2) * (pow2(2 * n) - BigInt::one()));
    Ok(sum * int(sign_pow(n_i + 1) * n_i) / denom)
}

/// Positive secant number `E_{2n}` from circular Eulerian numbers.
pub fn secant_via_eulerian(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "secant_via_eulerian needs n ≥ 1".into(),
        ));
    }
    let n_i = n as i64;
    let sum: Rational = (1..=2 * n_i)
        .map(|l| abar(2 * n + 1, l) * int(sqrt2_cos_odd_eighth(n_i - l)))
        .sum();
    let value = sum / from_bigint(pow2(n));
    if !value.is_integer() {
        return Err(Error::NonIntegerResult(value.to_string()));
    }
    Ok(value)
}

/// Sum of all circular Eulerian numbers `Σ_l Ā(n, l)`.
pub fn circular_total(n: u32) -> Result<BigUint> {
    Ok(EulerianTable::build(n, true)?.total())
}

/// `(n−1)!` as a `BigUint`.
pub fn circular_count(n: u32) -> BigUint {
    factorial(n.saturating_sub(1) as u64)
        .to_biguint()
        .expect("factorials are positive")
}
