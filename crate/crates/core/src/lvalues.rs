//! Exact special values: spectral sums of the twisted circle operator, Dirichlet
//! L-values by three independent routes, cycle-graph zeta and L-functions,
//! Verlinde numbers and character-averaged means.
//!
//! Every value is `coeff·π^k` with `coeff` in a cyclotomic field. Sums over
//! characters are formed as `Σ_m χ(m)·T(m)`, where the kernel `T(m)` depends only
//! on `(N, n)` and is cached; the character enters only through the root of unity
//! `χ(m)`.
//!
//! Conventions:
//! * Sums over `m` run over `1..N−1`; the `m = N` term of a closed form carries
//!   `χ(N) = 0` and is dropped.
//! * `L(1, χ)` exists only for odd `χ`; the `n = 1` spectral sum is the symmetric limit
//!   `(1/2)·cot(α/2)`.
//! * `N = 1` L-values are Riemann zeta values.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::characters::{characters, gauss_sum, DirichletCharacter, Parity};
use crate::coeffs::{coeff_a, coeff_b, laurent_c};
use crate::combinatorics::{abar, bernoulli_numbers, bernoulli_polynomial, secant_numbers};
use crate::error::{Error, Result};
use crate::exactnum::rational::{
    euler_phi, factorial_q, from_bigint, gcd_u64, int, lcm_u64, pow2, rat, sign_pow, Rational,
};
use crate::exactnum::{csc, trig_alg, CycNum, CycSum, TrigKind};

/// `coeff·π^pi_power`.
#[derive(Clone, Debug)]
pub struct SpecialValue {
    pub pi_power: i32,
    pub coeff: CycNum,
}

impl SpecialValue {
    pub fn new(pi_power: i32, coeff: CycNum) -> Self {
        SpecialValue { pi_power, coeff }
    }

    pub fn rational(pi_power: i32, q: Rational) -> Self {
        SpecialValue::new(pi_power, CycNum::from_rational(q, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The rational coefficient, if the coefficient lies in `Q`.
    pub fn rational_coeff(&self) -> Option<Rational> {
        self.coeff.as_rational()
    }

    pub fn scale(&self, q: &Rational) -> SpecialValue {
        SpecialValue::new(self.pi_power, self.coeff.scale(q))
    }

    pub fn numeric(&self) -> Complex64 {
        self.coeff.to_complex() * std::f64::consts::PI.powi(self.pi_power)
    }

    /// Sum of values with equal `pi_power`.
    pub fn try_add(&self, other: &SpecialValue) -> Result<SpecialValue> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_power != other.pi_power {
            return Err(Error::InvalidArgument(format!(
                "cannot add π^{} and π^{} values",
                self.pi_power, other.pi_power
            )));
        }
        Ok(SpecialValue::new(self.pi_power, &self.coeff + &other.coeff))
    }

    pub fn mul(&self, other: &SpecialValue) -> SpecialValue {
        SpecialValue::new(self.pi_power + other.pi_power, &self.coeff * &other.coeff)
    }
}

impl PartialEq for SpecialValue {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.pi_power == other.pi_power && self.coeff == other.coeff
    }
}

impl Eq for SpecialValue {}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})·π", self.coeff),
            k => write!(f, "({})·π^{k}", self.coeff),
        }
    }
}

/// `α = 2π·p/q` with `q ∤ p`, stored in lowest terms, and the exponent `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralSumSpec {
    p: i64,
    q: u64,
    n: u32,
}

impl SpectralSumSpec {
    pub fn new(p: i64, q: u64, n: u32) -> Result<Self> {
        if q == 0 || n == 0 {
            return Err(Error::InvalidArgument("need q ≥ 1 and n ≥ 1".into()));
        }
        if p.rem_euclid(q as i64) == 0 {
            return Err(Error::AlphaIsPole { p, q });
        }
        let g = gcd_u64(p.unsigned_abs(), q);
        Ok(SpectralSumSpec {
            p: p / g as i64,
            q: q / g,
            n,
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        std::f64::consts::TAU * self.p as f64 / self.q as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kernel {
    /// `cot x` for `n = 1`, else `csc^n x · Σ_{l=1}^{n−1} cos((n−2l)x)·Ā(n, l)`.
    Closed(u32),
    /// `csc^{2i} x`.
    Csc(u32),
    /// `cot x · csc^{2i} x`.
    CotCsc(u32),
}

/// `T(x)` at `x = mπ/N` in `Q(ζ_{4N})`; `N ∤ m`.
fn kernel_at(n_mod: u64, m: i64, kernel: Kernel) -> Result<CycNum> {
    match kernel {
        Kernel::Closed(1) => trig_alg(n_mod, m, TrigKind::Cot),
        Kernel::Closed(s) => {
            let s_i = s as i64;
            let mut cos_sum = CycSum::new(4 * n_mod);
            for l in 1..s_i {
                let cos = trig_alg(n_mod, (s_i - 2 * l) * m, TrigKind::Cos)?;
                cos_sum.add_scaled(&cos, 0, &abar(s, l))?;
            }
            Ok(&csc(n_mod, m)?.pow(s) * &cos_sum.finish())
        }
        Kernel::Csc(i) => Ok(csc(n_mod, m)?.pow(2 * i)),
        Kernel::CotCsc(i) => Ok(&trig_alg(n_mod, m, TrigKind::Cot)? * &csc(n_mod, m)?.pow(2 * i)),
    }
}

/// `[T(π/N), …, T((N−1)π/N)]`, cached per `(N, kernel)`.
fn kernel_table(n_mod: u64, kernel: Kernel) -> Result<Arc<Vec<CycNum>>> {
    type Table = HashMap<(u64, Kernel), Arc<Vec<CycNum>>>;
    static CACHE: OnceLock<RwLock<Table>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&(n_mod, kernel)) {
        return Ok(t.clone());
    }
    let table: Vec<CycNum> = (1..n_mod as i64)
        .map(|m| kernel_at(n_mod, m, kernel))
        .collect::<Result<_>>()?;
    let table = Arc::new(table);
    cache
        .write()
        .unwrap()
        .insert((n_mod, kernel), table.clone());
    Ok(table)
}

/// `Σ_{m=1}^{N−1} χ(m)·T(m)` in `Q(ζ_{lcm(4N, r)})`.
fn character_weighted(chi: &DirichletCharacter, kernel: Kernel) -> Result<CycNum> {
    let n_mod = chi.modulus();
    let table = kernel_table(n_mod, kernel)?;
    let r = chi.order();
    let big = lcm_u64(4 * n_mod, r);
    let mut sum = CycSum::new(big);
    let one = Rational::one();
    for m in 1..n_mod as i64 {
        if let Some(j) = chi.exponent_at(m) {
            sum.add_scaled(&table[m as usize - 1], j as i64 * (big / r) as i64, &one)?;
        }
    }
    Ok(sum.finish())
}

fn check_parity(n: u32, chi: &DirichletCharacter) -> Result<()> {
    if chi.parity() != Parity::of_integer(n as i64) {
        return Err(Error::ParityMismatch {
            n,
            chi_minus_one: chi.parity().sign() as i32,
        });
    }
    Ok(())
}

fn check_primitive(chi: &DirichletCharacter) -> Result<()> {
    let conductor = chi.conductor();
    if conductor != chi.modulus() {
        return Err(Error::NotPrimitive {
            conductor,
            modulus: chi.modulus(),
        });
    }
    Ok(())
}

fn check_graph_modulus(n_mod: u64) -> Result<()> {
    if n_mod < 2 {
        return Err(Error::InvalidArgument("cycle graphs need N ≥ 2".into()));
    }
    Ok(())
}

fn check_positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be ≥ 1".into()));
    }
    Ok(())
}

fn n_pow(n_mod: u64, e: u32) -> Rational {
    from_bigint(num_bigint::BigInt::from(n_mod).pow(e))
}

/// `lim_K Σ_{k=−K}^{K} (2kπ + α)^{−n}`, an algebraic number (`pi_power` 0).
pub fn spectral_sum(spec: SpectralSumSpec) -> Result<SpecialValue> {
    let n = spec.n;
    let t = kernel_at(spec.q, spec.p, Kernel::Closed(n))?;
    let scale = (from_bigint(pow2(n)) * factorial_q(n as u64 - 1)).recip();
    Ok(SpecialValue::new(0, t.scale(&scale)))
}

/// `ζ(2n) = (−1)^{n+1} (2π)^{2n} B_{2n} / (2·(2n)!)`.
pub fn zeta_even(n: u32) -> Result<SpecialValue> {
    check_positive(n)?;
    let b = &bernoulli_numbers(2 * n as usize)[2 * n as usize];
    let q = b * from_bigint(pow2(2 * n)) * int(sign_pow(n as i64 + 1))
        / (factorial_q(2 * n as u64) * int(2));
    Ok(SpecialValue::rational(2 * n as i32, q))
}

/// `L(2n+1, χ_4) = π^{2n+1} E_{2n} / (2^{2n+2} (2n)!)` with positive secant numbers.
pub fn l_chi4_odd(n: u32) -> SpecialValue {
    let e = from_bigint(secant_numbers(n as usize)[2 * n as usize].clone());
    let q = e / (from_bigint(pow2(2 * n + 2)) * factorial_q(2 * n as u64));
    SpecialValue::rational(2 * n as i32 + 1, q)
}

/// `S(n) = Σ_{k∈Z} (4k+1)^{−n} = (π/2)^n · spectral_sum(α = π/2)`, cross-checked
/// against `(1 − 2^{−n}) ζ(n)` for even `n` and `L(n, χ_4)` for odd `n`.
pub fn s_value(n: u32) -> Result<SpecialValue> {
    let spec = SpectralSumSpec::new(1, 4, n)?;
    let v = spectral_sum(spec)?;
    let value = SpecialValue::new(n as i32, v.coeff.scale(&from_bigint(pow2(n)).recip()));
    let other = if n.is_multiple_of(2) {
        let factor = int(1) - from_bigint(pow2(n)).recip();
        zeta_even(n / 2)?.scale(&factor)
    } else {
        l_chi4_odd((n - 1) / 2)
    };
    if value != other {
        return Err(Error::InternalIdentityViolation(format!(
            "S({n}) = {value} disagrees with {other}"
        )));
    }
    Ok(value)
}

/// `L(n, χ)` from the Eulerian closed form; any character of matching parity.
pub fn dirichlet_l_closed(n: u32, chi: &DirichletCharacter) -> Result<SpecialValue> {
    check_positive(n)?;
    check_parity(n, chi)?;
    let n_mod = chi.modulus();
    if n_mod == 1 {
        return zeta_even(n / 2);
    }
    let sum = character_weighted(chi, Kernel::Closed(n))?;
    let scale = (int(2) * factorial_q(n as u64 - 1) * n_pow(n_mod, n)).recip();
    Ok(SpecialValue::new(n as i32, sum.scale(&scale)))
}

/// `L(n, χ) = −χ(−1) G(χ) (2π√−1)^n / (2N·n!) · Σ_j χ̄(j) 𝐁_n(j/N)`; primitive `χ` only.
pub fn dirichlet_l_leopoldt(n: u32, chi: &DirichletCharacter) -> Result<SpecialValue> {
    check_positive(n)?;
    check_primitive(chi)?;
    check_parity(n, chi)?;
    let n_mod = chi.modulus();
    let r = chi.order();
    let bern = bernoulli_polynomial(n as usize);
    let mut sum = CycSum::new(r);
    for j in 1..=n_mod as i64 {
        if let Some(e) = chi.exponent_at(j) {
            sum.add_root(-(e as i64), &bern.eval(&rat(j, n_mod as i64)));
        }
    }
    let big = lcm_u64(4 * n_mod, r);
    let product = &gauss_sum(chi).promote(big)? * &sum.finish().promote(big)?;
    let scale = from_bigint(pow2(n)) * int(-chi.parity().sign())
        / (int(2 * n_mod as i64) * factorial_q(n as u64));
    let coeff = product.mul_root(n as i64 * (big / 4) as i64).scale(&scale);
    Ok(SpecialValue::new(n as i32, coeff))
}

/// `ζ_{Z/NZ}(n) = Σ_{m=1}^{N−1} sin^{−2n}(mπ/N)`, which is rational.
pub fn graph_zeta(n: u32, n_mod: u64) -> Result<Rational> {
    check_positive(n)?;
    check_graph_modulus(n_mod)?;
    let table = kernel_table(n_mod, Kernel::Csc(n))?;
    let mut acc = CycSum::new(4 * n_mod);
    for t in table.iter() {
        acc.add_scaled(t, 0, &Rational::one())?;
    }
    let total = acc.finish();
    total
        .as_rational()
        .ok_or_else(|| Error::NonRationalResult(total.to_string()))
}

/// `V_g(N) = Σ_{s=0}^{g} (−1)^{s−1} 2^{2s} B_{2s}/(2s)! · c_{g,s} N^{2s}`.
pub fn verlinde_zagier(g: u32, n_mod: u64) -> Result<Rational> {
    check_positive(g)?;
    check_graph_modulus(n_mod)?;
    let b = bernoulli_numbers(2 * g as usize);
    let c = laurent_c(g)?;
    Ok((0..=g)
        .map(|s| {
            let s_u = s as usize;
            &b[2 * s_u] * from_bigint(pow2(2 * s)) / factorial_q(2 * s as u64)
                * &c[s_u]
                * n_pow(n_mod, 2 * s)
                * int(-sign_pow(s as i64))
        })
        .sum())
}

/// `Σ_m χ(m) csc^{2n}(mπ/N)`, or with an extra `cot(mπ/N)` when `twisted`.
pub fn graph_l(n: u32, chi: &DirichletCharacter, twisted: bool) -> Result<CycNum> {
    check_graph_modulus(chi.modulus())?;
    let kernel = if twisted {
        Kernel::CotCsc(n)
    } else {
        Kernel::Csc(n)
    };
    character_weighted(chi, kernel)
}

/// `L(2n, χ)` for even `χ` or `L(2n+1, χ)` for odd `χ`, from graph L-values.
pub fn l_from_graph(n: u32, chi: &DirichletCharacter) -> Result<SpecialValue> {
    check_positive(n)?;
    let n_mod = chi.modulus();
    check_graph_modulus(n_mod)?;
    let (weights, twisted, s) = match chi.parity() {
        Parity::Even => (coeff_a(n)?, false, 2 * n),
        Parity::Odd => (coeff_b(n)?, true, 2 * n + 1),
    };
    let mut acc = CycNum::zero(lcm_u64(4 * n_mod, chi.order()));
    for (i, w) in weights.iter().enumerate() {
        acc = &acc + &graph_l(i as u32 + 1, chi, twisted)?.scale(w);
    }
    let denom = match chi.parity() {
        Parity::Even => int(2) * factorial_q(2 * n as u64 - 1),
        Parity::Odd => factorial_q(2 * n as u64),
    } * n_pow(n_mod, s);
    Ok(SpecialValue::new(s as i32, acc.scale(&denom.recip())))
}

/// Graph L-value of index `n` from the L-values `values[i−1] = L(2i, χ)` (even `χ`)
/// or `L(2i+1, χ)` (odd `χ`), `1 ≤ i ≤ n`.
pub fn graph_from_l_values(
    n: u32,
    chi: &DirichletCharacter,
    values: &[SpecialValue],
) -> Result<CycNum> {
    check_positive(n)?;
    let n_mod = chi.modulus();
    check_graph_modulus(n_mod)?;
    if values.len() < n as usize {
        return Err(Error::InvalidArgument(format!(
            "need {n} L-values, got {}",
            values.len()
        )));
    }
    let c = laurent_c(n)?;
    let odd = chi.parity() == Parity::Odd;
    let mut acc = CycNum::zero(1);
    for i in 1..=n {
        let v = &values[i as usize - 1];
        let s = if odd { 2 * i + 1 } else { 2 * i };
        if !v.is_zero() && v.pi_power != s as i32 {
            return Err(Error::InvalidArgument(format!(
                "L-value {i} has π^{} instead of π^{s}",
                v.pi_power
            )));
        }
        let mut w = &c[i as usize] * n_pow(n_mod, s);
        if odd {
            w *= int(i as i64);
        }
        acc = &acc + &v.coeff.scale(&w);
    }
    let outer = if odd { rat(2, n as i64) } else { int(2) };
    Ok(acc.scale(&outer))
}

/// Graph L-value of index `n` rebuilt from closed-form Dirichlet L-values.
pub fn graph_from_l(n: u32, chi: &DirichletCharacter) -> Result<CycNum> {
    let offset = u32::from(chi.parity() == Parity::Odd);
    let values: Vec<SpecialValue> = (1..=n)
        .map(|i| dirichlet_l_closed(2 * i + offset, chi))
        .collect::<Result<_>>()?;
    graph_from_l_values(n, chi, &values)
}

/// `ζ(2n) = π^{2n} / (2(2n−1)!(N^{2n} − 1)) · Σ_i a_{n,i} ζ_{Z/NZ}(i)`.
pub fn zeta_from_spectral(n: u32, n_mod: u64) -> Result<SpecialValue> {
    check_positive(n)?;
    check_graph_modulus(n_mod)?;
    let a = coeff_a(n)?;
    let mut sum = Rational::zero();
    for (i, w) in a.iter().enumerate() {
        sum += w * graph_zeta(i as u32 + 1, n_mod)?;
    }
    let denom = int(2) * factorial_q(2 * n as u64 - 1) * (n_pow(n_mod, 2 * n) - int(1));
    Ok(SpecialValue::rational(2 * n as i32, sum / denom))
}

/// Graph L-value of index `n` from Bernoulli polynomials and `1/G(χ̄)`; primitive `χ`.
pub fn graph_l_via_bernoulli(n: u32, chi: &DirichletCharacter) -> Result<CycNum> {
    check_positive(n)?;
    check_primitive(chi)?;
    let n_mod = chi.modulus();
    check_graph_modulus(n_mod)?;
    let c = laurent_c(n)?;
    let odd = chi.parity() == Parity::Odd;
    let polys: Vec<_> = (1..=n)
        .map(|i| bernoulli_polynomial(2 * i as usize + usize::from(odd)))
        .collect();
    let r = chi.order();
    let mut sum = CycSum::new(r);
    for j in 1..=n_mod as i64 {
        let Some(e) = chi.exponent_at(j) else {
            continue;
        };
        let x = rat(j, n_mod as i64);
        let inner: Rational = (1..=n)
            .map(|i| {
                let i_idx = i as usize;
                let p = &polys[i_idx - 1];
                if odd {
                    // (2√−1)^{2i+1} = 2^{2i+1}(−1)^i √−1; the √−1 is applied below
                    p.eval(&x) * from_bigint(pow2(2 * i + 1)) * int(sign_pow(i as i64))
                        / factorial_q(2 * i as u64 + 1)
                        * &c[i_idx]
                        * int(i as i64)
                        * n_pow(n_mod, 2 * i + 1)
                } else {
                    p.eval(&x) * from_bigint(pow2(2 * i)) * int(-sign_pow(i as i64))
                        / factorial_q(2 * i as u64)
                        * &c[i_idx]
                        * n_pow(n_mod, 2 * i)
                }
            })
            .sum();
        sum.add_root(-(e as i64), &inner);
    }
    let g_inv = gauss_sum(&chi.conj()).inv()?;
    let value = &sum.finish() * &g_inv;
    if odd {
        // G(χ)G(χ̄) = χ(−1)N contributes the factor χ(−1) = −1
        let big = lcm_u64(4, value.conductor());
        Ok(value
            .promote(big)?
            .mul_root((big / 4) as i64)
            .scale(&rat(-1, n as i64)))
    } else {
        Ok(value)
    }
}

/// `(2/φ(N)) Σ_{χ of the given parity} L(s, χ)` in closed form, where
/// `s = 2n` for even parity and `s = 2n − 1` for odd parity.
pub fn mean_l_closed_form(n: u32, n_mod: u64, parity: Parity) -> Result<SpecialValue> {
    check_positive(n)?;
    if n_mod < 3 {
        return Err(Error::InvalidArgument("mean values need N ≥ 3".into()));
    }
    let kernel_sum = |weights: &[Rational], kernel: fn(u32) -> Kernel| -> Result<CycNum> {
        let mut acc = CycSum::new(4 * n_mod);
        for (i, w) in weights.iter().enumerate() {
            acc.add_scaled(&kernel_at(n_mod, 1, kernel(i as u32 + 1))?, 0, w)?;
        }
        Ok(acc.finish())
    };
    match parity {
        Parity::Even => {
            let s = kernel_sum(&coeff_a(n)?, Kernel::Csc)?;
            let denom = factorial_q(2 * n as u64 - 1) * n_pow(n_mod, 2 * n);
            Ok(SpecialValue::new(2 * n as i32, s.scale(&denom.recip())))
        }
        Parity::Odd if n == 1 => {
            let cot = trig_alg(n_mod, 1, TrigKind::Cot)?;
            Ok(SpecialValue::new(1, cot.scale(&rat(1, n_mod as i64))))
        }
        Parity::Odd => {
            let k = n - 1;
            let s = kernel_sum(&coeff_b(k)?, Kernel::CotCsc)?;
            let denom = factorial_q(2 * k as u64) * n_pow(n_mod, 2 * k + 1);
            Ok(SpecialValue::new(
                2 * k as i32 + 1,
                s.scale(&(int(2) / denom)),
            ))
        }
    }
}

/// The same mean as [`mean_l_closed_form`], averaging [`dirichlet_l_closed`] over characters.
pub fn mean_l_bruteforce(n: u32, n_mod: u64, parity: Parity) -> Result<SpecialValue> {
    check_positive(n)?;
    let s = match parity {
        Parity::Even => 2 * n,
        Parity::Odd => 2 * n - 1,
    };
    let mut acc = SpecialValue::rational(s as i32, Rational::zero());
    for chi in characters(n_mod).iter().filter(|c| c.parity() == parity) {
        acc = acc.try_add(&dirichlet_l_closed(s, chi)?)?;
    }
    Ok(acc.scale(&rat(2, euler_phi(n_mod) as i64)))
}
