//! Cyclotomic fields `Q(ζ_M)` in the power basis modulo `Φ_M`.
//!
//! An element is stored as its `φ(M)` coefficients on `1, ζ, …, ζ^{φ(M)-1}`; the
//! vector is the canonical form, so equality at a shared conductor is a plain
//! comparison. Binary operations on elements of different conductors first promote
//! both sides to the lcm. Nothing is ever descended to a smaller conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::PolyQ;
use super::rational::{common_denominator, divisors, euler_phi, lcm_u64, Rational};
use crate::error::{Error, Result};

struct Cyclotomic {
    poly: PolyQ,
    /// Nonzero `(degree, coefficient)` pairs of `Φ_M` below its leading term.
    tail: Vec<(usize, i64)>,
    degree: usize,
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<Cyclotomic>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Cyclotomic>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic(m: u64) -> Arc<Cyclotomic> {
    if let Some(c) = cache().read().unwrap().get(&m) {
        return c.clone();
    }
    // x^M - 1 = Π_{d | M} Φ_d
    let mut poly = PolyQ::monomial(Rational::one(), m as usize);
    poly = &poly - &PolyQ::one();
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        let (q, r) = poly
            .div_rem(&cyclotomic(d).poly)
            .expect("cyclotomic polynomials are nonzero");
        debug_assert!(r.is_zero());
        poly = q;
    }
    let degree = poly.degree().expect("Φ_M is nonzero");
    debug_assert_eq!(degree as u64, euler_phi(m));
    let tail = poly.coeffs()[..degree]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            let c = c
                .to_integer()
                .to_i64()
                .expect("cyclotomic coefficients are small");
            (j, c)
        })
        .collect();
    let entry = Arc::new(Cyclotomic { poly, tail, degree });
    cache().write().unwrap().entry(m).or_insert(entry).clone()
}

/// The `M`-th cyclotomic polynomial `Φ_M`, monic of degree `φ(M)`.
pub fn cyclotomic_polynomial(m: u64) -> Result<PolyQ> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic index must be ≥ 1".into(),
        ));
    }
    Ok(cyclotomic(m).poly.clone())
}

/// Reduces a coefficient vector in the redundant basis `1, ζ, ζ², …` modulo `Φ_M`.
///
/// All arithmetic happens over the integers after clearing one common denominator.
fn reduce(m: u64, coeffs: &[Rational]) -> Vec<Rational> {
    let cyc = cyclotomic(m);
    let phi = cyc.degree;
    let den = common_denominator(coeffs);
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                (c * Rational::from_integer(den.clone())).to_integer()
            }
        })
        .collect();
    reduce_ints(&cyc, ints, &den, phi)
}

fn reduce_ints(cyc: &Cyclotomic, mut ints: Vec<BigInt>, den: &BigInt, phi: usize) -> Vec<Rational> {
    for d in (phi..ints.len()).rev() {
        if ints[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut ints[d]);
        let base = d - phi;
        for &(j, pj) in &cyc.tail {
            ints[base + j] -= &c * pj;
        }
    }
    ints.resize(phi, BigInt::zero());
    ints.into_iter()
        .map(|n| {
            if n.is_zero() {
                Rational::zero()
            } else {
                Rational::new(n, den.clone())
            }
        })
        .collect()
}

/// Element of the cyclotomic field `Q(ζ_M)`, `ζ_M = e^{2π√−1/M}`.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycNum {
    /// Builds an element from coefficients on `1, ζ_M, ζ_M², …` of any length.
    pub fn new(conductor: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be ≥ 1".into()));
        }
        Ok(Self::from_redundant(conductor, coeffs))
    }

    fn from_redundant(conductor: u64, coeffs: Vec<Rational>) -> Self {
        let phi = euler_phi(conductor) as usize;
        let coeffs = if coeffs.len() <= phi {
            let mut c = coeffs;
            c.resize(phi, Rational::zero());
            c
        } else {
            reduce(conductor, &coeffs)
        };
        CycNum { conductor, coeffs }
    }

    pub fn zero(conductor: u64) -> Self {
        CycNum {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(Rational::one(), conductor)
    }

    pub fn from_rational(q: Rational, conductor: u64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    /// `ζ_M^k` for any integer `k`.
    pub fn root_of_unity(conductor: u64, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::from_redundant(conductor, coeffs)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Same value viewed in `Q(ζ_{M'})`; requires `M | M'`.
    pub fn promote(&self, target: u64) -> Result<CycNum> {
        if target == 0 || !target.is_multiple_of(self.conductor) {
            return Err(Error::InvalidArgument(format!(
                "cannot promote conductor {} to {}",
                self.conductor, target
            )));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let mut sum = CycSum::new(target);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                sum.terms[i * step] += c;
            }
        }
        Ok(sum.finish())
    }

    fn promoted_pair(&self, other: &CycNum) -> (CycNum, CycNum) {
        let m = lcm_u64(self.conductor, other.conductor);
        (self.promote(m).unwrap(), other.promote(m).unwrap())
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// `self · ζ_M^k`.
    pub fn mul_root(&self, k: i64) -> CycNum {
        let m = self.conductor as i64;
        let mut sum = CycSum::new(self.conductor);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                sum.terms[(i as i64 + k).rem_euclid(m) as usize] += c;
            }
        }
        sum.finish()
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycNum {
        let m = self.conductor as i64;
        let mut sum = CycSum::new(self.conductor);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                sum.terms[(-(i as i64)).rem_euclid(m) as usize] += c;
            }
        }
        sum.finish()
    }

    /// Inverse by the extended Euclidean algorithm against `Φ_M`.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cyc = cyclotomic(self.conductor);
        let a = PolyQ::from_coeffs(self.coeffs.clone());
        let (g, s, _) = PolyQ::ext_gcd(&a, &cyc.poly);
        if g != PolyQ::one() {
            return Err(Error::InternalIdentityViolation(
                "element shares a factor with Φ_M".into(),
            ));
        }
        let (_, r) = s.div_rem(&cyc.poly)?;
        Ok(Self::from_redundant(self.conductor, r.into_coeffs()))
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut result = CycNum::one(self.conductor);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Numeric value at `ζ_M = e^{2π√−1/M}` by Horner's rule.
    pub fn to_complex(&self) -> Complex64 {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / self.conductor as f64);
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * zeta + c.to_f64().unwrap_or(f64::NAN)
            })
    }

    fn mul_same(&self, rhs: &CycNum) -> CycNum {
        debug_assert_eq!(self.conductor, rhs.conductor);
        let cyc = cyclotomic(self.conductor);
        let phi = cyc.degree;
        let (da, ia) = scaled_ints(&self.coeffs);
        let (db, ib) = scaled_ints(&rhs.coeffs);
        let mut prod = vec![BigInt::zero(); 2 * phi.max(1) - 1];
        for (i, a) in ia.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in ib.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycNum {
            conductor: self.conductor,
            coeffs: reduce_ints(&cyc, prod, &(da * db), phi),
        }
    }
}

fn scaled_ints(coeffs: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let den = common_denominator(coeffs);
    let ints = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                c.numer() * (&den / c.denom())
            }
        })
        .collect();
    (den, ints)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.promoted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.promoted_pair(rhs);
        CycNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.promoted_pair(rhs);
        CycNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        let (a, b) = self.promoted_pair(rhs);
        a.mul_same(&b)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})ζ{}^{i}", self.conductor)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Accumulates `Σ c_k ζ_M^k` in the redundant basis and reduces once at the end.
#[derive(Clone, Debug)]
pub struct CycSum {
    conductor: u64,
    terms: Vec<Rational>,
}

impl CycSum {
    pub fn new(conductor: u64) -> Self {
        CycSum {
            conductor,
            terms: vec![Rational::zero(); conductor as usize],
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Adds `c · ζ_M^k`.
    pub fn add_root(&mut self, k: i64, c: &Rational) {
        if !c.is_zero() {
            self.terms[k.rem_euclid(self.conductor as i64) as usize] += c;
        }
    }

    /// Adds `c · ζ_M^k · z`; the conductor of `z` must divide `M`.
    pub fn add_scaled(&mut self, z: &CycNum, k: i64, c: &Rational) -> Result<()> {
        if !self.conductor.is_multiple_of(z.conductor) {
            return Err(Error::InvalidArgument(format!(
                "conductor {} does not divide {}",
                z.conductor, self.conductor
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let step = (self.conductor / z.conductor) as i64;
        let m = self.conductor as i64;
        for (i, a) in z.coeffs.iter().enumerate() {
            if !a.is_zero() {
                self.terms[(i as i64 * step + k).rem_euclid(m) as usize] += a * c;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> CycNum {
        CycNum::from_redundant(self.conductor, self.terms)
    }
}
